from dataclasses import dataclass, field


@dataclass(frozen=True)
class Limits:
    # largest |alpha| accepted by the membership DP
    max_block_size: int = 64
    # largest n for enumerate_blocks
    max_enum_n: int = 20
    # exhaustive strategies for N(r, e)
    full_max_e: int = 6
    full_max_r: int = 6
    equal_max_e: int = 12
    equal_max_r: int = 8
    # literal multiset enumeration (only used as a cross-check)
    enum_max_e: int = 5
    enum_max_r: int = 5


DEFAULT_LIMITS = Limits()


@dataclass(frozen=True)
class Config:
    max_n: int = 12
    max_e: int = 8
    max_r: int = 6
    fmt: str = "text"
    jobs: int = 1
    seed: int = 0
    limits: Limits = field(default_factory=Limits)

    def __post_init__(self):
        for name in ("max_n", "max_e", "max_r", "jobs"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.fmt not in ("text", "json", "tsv"):
            raise ValueError(f"unknown format {self.fmt!r}")
