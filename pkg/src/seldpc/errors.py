"""Exception types shared across the toolkit."""


class SeldpcError(Exception):
    pass


class RankDeficient(SeldpcError):
    """Parity-check matrix rows are linearly dependent over GF(2)."""

    def __init__(self, rank, n_rows):
        self.rank = rank
        self.n_rows = n_rows
        super().__init__(f"matrix has rank {rank} < {n_rows} rows")


class DegenerateGraph(SeldpcError):
    """Zero row or zero column where a proper Tanner graph is required."""


class InvalidPlan(SeldpcError):
    """Split plan inconsistent with the matrix row supports."""


class RowTooSmall(SeldpcError):
    """Row degree smaller than the requested number of split parts."""


class NotACodeword(SeldpcError):
    """Vector fails the parity checks of the matrix it was claimed for."""


class SingularExtension(SeldpcError):
    """Extended columns of a split-extension are linearly dependent."""


class NormalizationFailure(SeldpcError):
    """A derived edge-type distribution failed to sum to one."""


class BracketFailure(SeldpcError):
    """Root/threshold search could not bracket a sign change."""


class ConfigError(SeldpcError):
    """Inconsistent simulation configuration."""
