"""Packing several small nonnegative fields into one machine word."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ..exceptions import InputError, ResourceError

WORD_BITS = 63


@dataclass(frozen=True)
class WordCodec:
    """Fixed-width bit fields laid out high to low inside a nonnegative word."""

    widths: tuple[int, ...]

    def __post_init__(self):
        if any(b < 1 for b in self.widths):
            raise ResourceError(f"Field widths must be positive, got {self.widths}")
        if sum(self.widths) > WORD_BITS:
            raise ResourceError(
                f"Fields of {sum(self.widths)} bits do not fit a {WORD_BITS}-bit word"
            )

    @classmethod
    def for_maxima(cls, maxima: Sequence[int]) -> WordCodec:
        """Codec whose i-th field holds any value in ``[0, maxima[i]]``."""
        return cls(tuple(max(1, int(m).bit_length()) for m in maxima))

    def pack(self, *values: int) -> int:
        if len(values) != len(self.widths):
            raise InputError(f"Expected {len(self.widths)} fields, got {len(values)}")
        word = 0
        for v, b in zip(values, self.widths):
            if not 0 <= v < (1 << b):
                raise InputError(f"Field value {v} does not fit {b} bits")
            word = (word << b) | v
        return word

    def unpack(self, word: int) -> tuple[int, ...]:
        out = []
        for b in reversed(self.widths):
            out.append(word & ((1 << b) - 1))
            word >>= b
        return tuple(reversed(out))


@dataclass(frozen=True)
class RecordCodec:
    """Fields packed into one word when they fit, otherwise one word per field."""

    arity: int
    packed: WordCodec | None = None

    @classmethod
    def for_maxima(cls, maxima: Sequence[int]) -> RecordCodec:
        if any(int(m).bit_length() > WORD_BITS for m in maxima):
            raise ResourceError(f"A field maximum in {tuple(maxima)} exceeds one word")
        try:
            return cls(len(maxima), WordCodec.for_maxima(maxima))
        except ResourceError:
            return cls(len(maxima))

    @property
    def width(self) -> int:
        """Words per record."""
        return 1 if self.packed is not None else self.arity

    def encode(self, *values: int) -> tuple[int, ...]:
        if self.packed is not None:
            return (self.packed.pack(*values),)
        if len(values) != self.arity:
            raise InputError(f"Expected {self.arity} fields, got {len(values)}")
        if any(v < 0 for v in values):
            raise InputError(f"Field values must be nonnegative, got {values}")
        return tuple(values)

    def decode(self, record: Sequence[int]) -> tuple[int, ...]:
        if self.packed is not None:
            return self.packed.unpack(record[0])
        return tuple(record)

    def split(self, words: Sequence[int]) -> list[tuple[int, ...]]:
        """Cut a record-aligned word stream into records."""
        if len(words) % self.width:
            raise InputError(f"{len(words)} words are not a whole number of {self.width}-word records")
        return [tuple(words[i : i + self.width]) for i in range(0, len(words), self.width)]
