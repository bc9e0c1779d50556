"""Gilbert-Varshamov type lower bounds on code sizes, their oracles and constructions."""
