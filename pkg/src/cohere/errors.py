"""Exception hierarchy for the cohere engine."""

from __future__ import annotations

from fractions import Fraction


class CohereError(Exception):
    """Base class for every error raised by the engine."""


class FormulaSyntaxError(CohereError):
    """Formula text does not conform to the grammar."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at offset {position}")


class MissingAtomError(CohereError):
    """A world does not assign a truth value to an atom of the formula."""

    def __init__(self, atom: str):
        self.atom = atom
        super().__init__(f"world has no value for atom '{atom}'")


class AtomLimitError(CohereError):
    """Too many atoms for brute-force world enumeration."""

    def __init__(self, count: int, limit: int):
        self.count = count
        self.limit = limit
        super().__init__(f"{count} atoms exceed the enumeration limit of {limit}")


class ImpossibleAntecedentError(CohereError):
    """A conditional event has an antecedent that no admissible world satisfies."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"antecedent of '{name}' is impossible under the constraints")


class MissingSymbolError(CohereError):
    """An assessment lacks a value for a prevision symbol."""

    def __init__(self, symbol: str):
        self.symbol = symbol
        super().__init__(f"assessment has no value for {symbol}")


class OutOfRangeError(CohereError):
    """A probability or prevision lies outside [0, 1]."""

    def __init__(self, value: Fraction, what: str = "value"):
        self.value = value
        super().__init__(f"{what} {value} is outside [0, 1]")


class SymbolicValueError(CohereError):
    """A numeric-only operation met an uninstantiated prevision symbol."""


class InconsistentSymbolsError(CohereError):
    """Supplied conjunction and disjunction symbols violate the duality relation."""


class InfeasibleSystemError(CohereError):
    """An operation that needs a solvable system got an infeasible one."""


class IncoherentAssessmentError(CohereError):
    """The base assessment of an extension query is not coherent."""


class FamilyTooLargeError(CohereError):
    """A family exceeds an exponential enumeration guard."""

    def __init__(self, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(f"family of size {size} exceeds the limit of {limit}")


class UndefinedPrevisionError(CohereError):
    """The iterated prevision is undefined because P(C_n) = 0."""


class RegionError(CohereError):
    """An assessment lies outside the region where a closed form applies."""


class ProblemFileError(CohereError):
    """A problem file could not be read or is semantically invalid."""


class UnknownRuleError(CohereError):
    """Rule name is not in the catalog."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown rule '{name}'")
