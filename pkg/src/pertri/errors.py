"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent input data."""


class ShapeError(InputError):
    """A matrix does not have the band structure an operation needs."""


class ParityError(InputError):
    """The period length has the wrong parity for the requested operation."""


class PreconditionError(InputError):
    """Arguments violate a documented precondition (e.g. palindromic entries)."""


class HypothesisError(InputError):
    """Period words do not satisfy the symmetry hypotheses.

    The failing :class:`~pertri.period.ValidationReport` is available as
    ``report``.
    """

    def __init__(self, report):
        self.report = report
        lines = [f.describe() for f in report.failures]
        super().__init__("hypotheses fail: " + "; ".join(lines))
