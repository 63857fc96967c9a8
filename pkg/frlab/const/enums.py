from enum import IntEnum, StrEnum


class ExperimentName(StrEnum):
    DENSITY = "density"
    QUOTIENT = "quotient"
    INCLUSION = "inclusion"
    XJ = "xj"
    CURVE = "curve"
    CHARSUM = "charsum"
    J7 = "j7"
    REPRESENT = "represent"
    RUZSA = "ruzsa"
    FAREY = "farey"
    GROWTH = "growth"


class OutputFormat(StrEnum):
    JSON = "json"
    CSV = "csv"


class ExitCode(IntEnum):
    OK = 0
    VIOLATIONS = 1
    INVALID_INPUT = 2
