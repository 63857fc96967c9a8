from .characters import CharacterTable, DoubleSumResult
from .curve import CurvePolynomial, XjParams
from .prime_context import FactorialTable, PrimeContext
from .representation import FactorialIndex, RepresentationResult
from .residue_set import ResidueSet, WindowSpec

__all__ = [
    "CharacterTable",
    "CurvePolynomial",
    "DoubleSumResult",
    "FactorialIndex",
    "FactorialTable",
    "PrimeContext",
    "RepresentationResult",
    "ResidueSet",
    "WindowSpec",
    "XjParams",
]
