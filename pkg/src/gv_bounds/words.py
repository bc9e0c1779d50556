"""Integer labels for words.

A word is labelled by its base-q digits read most significant first, so label
order is lexicographic word order.
"""

import itertools
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from gv_bounds.combinatorics import Count, binomial
from gv_bounds.constants import ALPHABET
from gv_bounds.errors import BudgetExceededError, InvalidParametersError
from gv_bounds.params import CodeParams

IntArray = npt.NDArray[np.int64]

# labels must fit in a signed 64-bit integer
_MAX_LABEL_BITS = 62


@dataclass(frozen=True)
class WordSpace:
    """Words of length n over q symbols, optionally restricted to weight w."""

    n: int
    q: int = 2
    w: int | None = None

    def __post_init__(self) -> None:
        """Make sure words can be labelled and written."""
        if self.q > len(ALPHABET):
            raise InvalidParametersError(f"Explicit words need q <= {len(ALPHABET)}, got q={self.q}")
        if self.q**self.n >= 2**_MAX_LABEL_BITS:
            raise BudgetExceededError(f"Words of length {self.n} over q={self.q} do not fit integer labels")

    @classmethod
    def of(cls, params: CodeParams) -> "WordSpace":
        """Get the word space of an instance."""
        return cls(params.n, params.q, params.w)

    @property
    def size(self) -> Count:
        """Get the number of words in the space."""
        return self.q**self.n if self.w is None else binomial(self.n, self.w)

    @property
    def powers(self) -> IntArray:
        """Get the place values of the digits."""
        return self.q ** np.arange(self.n - 1, -1, -1, dtype=np.int64)

    def labels(self) -> IntArray:
        """Get every word of the space in lexicographic order."""
        if self.w is None:
            return np.arange(self.size, dtype=np.int64)
        supports = np.array(list(itertools.combinations(range(self.n), self.w)), dtype=np.int64)
        return np.sort((1 << (self.n - 1 - supports.reshape(-1, self.w))).sum(axis=1))

    def digits(self, labels: npt.ArrayLike) -> IntArray:
        """Get the digit matrix of labels."""
        return (np.asarray(labels, dtype=np.int64)[..., None] // self.powers) % self.q

    def word(self, label: int) -> str:
        """Write a label as a word."""
        return "".join(ALPHABET[digit] for digit in self.digits([label])[0])

    def offsets(self, radius: int, low: int = 1) -> IntArray:
        """Get the digit rows of every move to a word at distance low..radius.

        For constant-weight spaces distances are Johnson distances, so only
        moves changing an even number 2 low..2 radius of bits are kept.
        """
        if self.w is None:
            supports = range(low, min(radius, self.n) + 1)
        else:
            supports = range(max(2, 2 * low), min(2 * radius, self.n) + 1, 2)
        blocks = [np.zeros((0, self.n), dtype=np.int64)]
        for k in supports:
            positions = np.array(list(itertools.combinations(range(self.n), k)), dtype=np.int64)
            values = np.array(list(itertools.product(range(1, self.q), repeat=k)), dtype=np.int64)
            block = np.zeros((len(positions) * len(values), self.n), dtype=np.int64)
            rows = np.arange(len(block))[:, None]
            block[rows, np.repeat(positions, len(values), axis=0)] = np.tile(values, (len(positions), 1))
            blocks.append(block)
        return np.concatenate(blocks)

    def neighbour_labels(self, labels: npt.ArrayLike, offsets: IntArray) -> IntArray:
        """Get the label reached from each label by each offset, -1 where outside the space."""
        moved = (self.digits(labels)[:, None, :] + offsets[None, :, :]) % self.q
        reached = moved @ self.powers
        if self.w is not None:
            reached[np.count_nonzero(moved, axis=2) != self.w] = -1
        return reached


def member_indices(labels: IntArray, reached: IntArray) -> IntArray:
    """Get the positions in sorted labels of the reached labels present there."""
    if len(labels) == 0:
        return np.zeros(0, dtype=np.int64)
    index = np.minimum(np.searchsorted(labels, reached), len(labels) - 1)
    return index[(reached >= 0) & (labels[index] == reached)]
