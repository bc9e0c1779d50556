"""Explicit codes, their verification and their text format.

A codebook file starts with a header line

    # n=<n> d=<d> q=<q> [w=<w>] size=<k> mindist=<verified>

followed by one word per line written over the symbols 0-9a-z.
"""

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from typing import Any

import numpy as np
import numpy.typing as npt
from scipy.spatial.distance import pdist

from gv_bounds.constants import ALPHABET, BLOCK_ELEMENTS, PAIRWISE_WORD_LIMIT
from gv_bounds.errors import CodebookError, InvalidParametersError
from gv_bounds.params import CodeParams
from gv_bounds.words import WordSpace, member_indices

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Codebook:
    """A set of codewords with its verified minimum Hamming distance.

    For constant-weight parameters the target distance is 2d.
    """

    params: CodeParams
    words: tuple[str, ...]
    min_distance: int
    metadata: Mapping[str, Any] = field(default_factory=dict)

    @property
    def size(self) -> int:
        """Get the number of codewords."""
        return len(self.words)

    @property
    def required_distance(self) -> int:
        """Get the Hamming distance the parameters ask for."""
        return 2 * self.params.d if self.params.constant_weight else self.params.d

    @property
    def meets_distance(self) -> bool:
        """Get whether the verified distance reaches the required one."""
        return self.min_distance >= self.required_distance


def word_digits(params: CodeParams, words: Iterable[str]) -> npt.NDArray[np.int64]:
    """Parse words into a digit matrix, rejecting malformed words."""
    symbols = {symbol: value for value, symbol in enumerate(ALPHABET[: params.q])}
    rows = []
    for word in words:
        if len(word) != params.n:
            raise CodebookError(f"Word {word!r} does not have length {params.n}")
        try:
            rows.append([symbols[symbol] for symbol in word])
        except KeyError as e:
            raise CodebookError(f"Word {word!r} has a symbol outside the q={params.q} alphabet") from e
    return np.array(rows, dtype=np.int64).reshape(len(rows), params.n)


def _ball_min_distance(params: CodeParams, digits: npt.NDArray[np.int64]) -> int:
    """Find the smallest radius at which some word has another word on its sphere."""
    space = WordSpace(params.n, params.q)
    labels = np.sort(digits @ space.powers)
    for radius in range(1, params.n + 1):
        offsets = space.offsets(radius, low=radius)
        block = max(1, BLOCK_ELEMENTS // max(1, len(offsets) * params.n))
        for start in range(0, len(labels), block):
            reached = space.neighbour_labels(labels[start : start + block], offsets)
            if len(member_indices(labels, reached.ravel())):
                return radius
    raise ArithmeticError("Distinct words must differ within n positions")


def _verify(params: CodeParams, words: tuple[str, ...]) -> int:
    if not words:
        raise CodebookError("Codebook has no words")
    if len(set(words)) != len(words):
        raise CodebookError("Codebook has duplicate words")
    digits = word_digits(params, words)
    if params.w is not None:
        weights = np.count_nonzero(digits, axis=1)
        if np.any(weights != params.w):
            raise CodebookError(f"Codebook has words whose weight differs from w={params.w}")
    if len(words) == 1:
        # no pair to measure
        return params.n + 1
    if len(words) > PAIRWISE_WORD_LIMIT:
        return _ball_min_distance(params, digits)
    distances = np.rint(pdist(digits, metric="hamming") * params.n).astype(np.int64)
    return int(distances.min())


def verify_code(book: Codebook) -> int:
    """Get the exact pairwise minimum distance of the book's words.

    A single word gives n + 1.
    """
    verified = _verify(book.params, book.words)
    if verified != book.min_distance:
        LOGGER.warning(f"Codebook claims distance {book.min_distance}, verified {verified}")
    return verified


def make_codebook(params: CodeParams, words: Iterable[str], *, strict: bool = True, **metadata: Any) -> Codebook:
    """Build a codebook with a verified minimum distance.

    With strict set, a book whose verified distance falls below the required
    one is rejected.
    """
    frozen = tuple(words)
    book = Codebook(params, frozen, _verify(params, frozen), metadata)
    if strict and not book.meets_distance:
        raise CodebookError(
            f"Codebook has minimum distance {book.min_distance}, {params} requires {book.required_distance}"
        )
    return book


def codebook_to_text(book: Codebook) -> str:
    """Render a codebook in the text format."""
    p = book.params
    header = f"# n={p.n} d={p.d} q={p.q}"
    if p.w is not None:
        header += f" w={p.w}"
    header += f" size={book.size} mindist={book.min_distance}"
    return "\n".join((header, *book.words)) + "\n"


def _parse_header(line: str) -> dict[str, int]:
    if not line.startswith("#"):
        raise CodebookError(f"Codebook must start with a '#' header line, got {line!r}")
    fields = {}
    for token in line[1:].split():
        key, sep, value = token.partition("=")
        if not sep:
            raise CodebookError(f"Malformed header token {token!r}")
        try:
            fields[key] = int(value)
        except ValueError as e:
            raise CodebookError(f"Header value {token!r} is not an integer") from e
    missing = {"n", "d", "q"} - fields.keys()
    if missing:
        raise CodebookError(f"Header is missing {', '.join(sorted(missing))}")
    return fields


def codebook_from_text(text: str) -> Codebook:
    """Parse and verify a codebook in the text format.

    Books below their header distance are returned so callers can report them.
    """
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise CodebookError("Codebook file is empty")
    header = _parse_header(lines[0])
    try:
        params = CodeParams(header["n"], header["d"], header["q"], header.get("w"))
    except InvalidParametersError as e:
        raise CodebookError(f"Invalid header parameters: {e}") from e

    words = tuple(line for line in lines[1:] if not line.startswith("#"))
    if "size" in header and header["size"] != len(words):
        raise CodebookError(f"Header size {header['size']} but {len(words)} words")
    book = make_codebook(params, words, strict=False)
    if "mindist" in header and header["mindist"] != book.min_distance:
        LOGGER.warning(f"Header distance {header['mindist']} differs from verified {book.min_distance}")
    return book
