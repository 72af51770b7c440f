"""Fixed-width tokens moved by the routing and sorting procedures."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from ..congest import StepMeter, compare_words
from ..exceptions import InputError
from ..graph.core import WORD_MAX

NO_RANK = -1
NO_DST = -1
NO_HOME = -1
# Pads WL-type keys; smaller than every color so padded order equals type order.
KEY_SENTINEL = -1
# Dummy tokens sort after every real token.
DUMMY_WORD = WORD_MAX
TRAILER_WORDS = 6


@dataclass(frozen=True)
class Token:
    """A word-vector key with bookkeeping fields, serialised as ``len(key) + 6`` words."""

    key: tuple[int, ...]
    tag: int
    src: int
    rank: int = NO_RANK
    dst: int = NO_DST
    flag: int = 0
    home: int = NO_HOME

    @property
    def width(self) -> int:
        return len(self.key) + TRAILER_WORDS

    @property
    def is_dummy(self) -> bool:
        return self.flag == DUMMY_WORD

    def to_words(self) -> list[int]:
        return [*self.key, self.tag, self.src, self.rank, self.dst, self.flag, self.home]

    @classmethod
    def from_words(cls, words: Sequence[int], key_len: int) -> Token:
        if len(words) != key_len + TRAILER_WORDS:
            raise InputError(f"Token record has {len(words)} words, expected {key_len + TRAILER_WORDS}")
        tag, src, rank, dst, flag, home = words[key_len:]
        return cls(tuple(words[:key_len]), tag, src, rank, dst, flag, home)

    def identity(self) -> tuple[tuple[int, ...], int, int]:
        """The (key, tag, src) triple conserved by every routing and sorting step."""
        return self.key, self.tag, self.src


def dst_field(key_len: int) -> int:
    """Word offset of ``dst`` inside a serialised token."""
    return key_len + 3


def pad_key(words: Sequence[int], length: int) -> tuple[int, ...]:
    """Right-pad ``words`` with the key sentinel to exactly ``length`` words."""
    if len(words) > length:
        raise InputError(f"Key of {len(words)} words exceeds padded length {length}")
    return tuple(words) + (KEY_SENTINEL,) * (length - len(words))


def dummy_token(key_len: int) -> Token:
    return Token((DUMMY_WORD,) * key_len, DUMMY_WORD, DUMMY_WORD, flag=DUMMY_WORD)


def key_len_of(placement: Iterable[Iterable[Token]]) -> int:
    """Common key length of all tokens (0 when there are none).

    Raises:
        InputError: If keys have different lengths
    """
    lengths = {len(t.key) for tokens in placement for t in tokens}
    if len(lengths) > 1:
        raise InputError(f"Token keys have unequal lengths {sorted(lengths)}")
    return lengths.pop() if lengths else 0


def key_order(a: Token, b: Token, meter: StepMeter) -> int:
    """Compare by (key, tag, src), one step per word examined."""
    return compare_words([*a.key, a.tag, a.src], [*b.key, b.tag, b.src], meter)


def flag_order(a: Token, b: Token, meter: StepMeter) -> int:
    """Compare by (flag, key, tag, src): unflagged tokens first."""
    return compare_words(
        [a.flag, *a.key, a.tag, a.src], [b.flag, *b.key, b.tag, b.src], meter
    )
