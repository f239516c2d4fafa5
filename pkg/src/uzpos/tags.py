from enum import Enum


class Tag(str, Enum):
    """Closed part-of-speech inventory: twelve word classes plus PUNCT."""

    NOUN = "NOUN"
    VERB = "VERB"
    ADJ = "ADJ"
    NUM = "NUM"
    ADV = "ADV"
    PRON = "PRON"
    AUX = "AUX"
    CONJ = "CONJ"
    PART = "PART"
    MOD = "MOD"
    IMIT = "IMIT"
    INTJ = "INTJ"
    PUNCT = "PUNCT"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, name):
        """Return the tag called ``name``; raises ``ValueError`` otherwise."""
        try:
            return cls(name.strip())
        except ValueError:
            raise ValueError(f"unknown tag {name!r}") from None


WORD_TAGS = tuple(t for t in Tag if t is not Tag.PUNCT)
