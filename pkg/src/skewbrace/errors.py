"""Exception hierarchy.

Every failure carries enough information (a reason tag and, where one
exists, a witness) to reproduce it from the tables alone.
"""


class SkewBraceError(ValueError):
    pass


class NotAGroup(SkewBraceError):
    REASONS = ("no-unit", "not-latin", "not-associative", "no-inverse")

    def __init__(self, reason, witness=None):
        self.reason = reason
        self.witness = witness
        super().__init__(f"not a group ({reason}); witness: {witness}")


class NotASubgroup(SkewBraceError):
    pass


class NotNormal(SkewBraceError):
    pass


class NotADigroup(SkewBraceError):
    def __init__(self, reason, witness=None):
        self.reason = reason
        self.witness = witness
        super().__init__(f"not a digroup ({reason}); witness: {witness}")


class NotABrace(SkewBraceError):
    def __init__(self, witness, reason="brace-axiom"):
        self.reason = reason
        self.witness = witness
        super().__init__(f"not a skew brace ({reason}); witness: {witness}")


class NotARing(SkewBraceError):
    def __init__(self, reason, witness=None):
        self.reason = reason
        self.witness = witness
        super().__init__(f"not a ring ({reason}); witness: {witness}")


class NotRadical(SkewBraceError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"element {witness} has no circle inverse")


class NotAnIdeal(SkewBraceError):
    pass


class NotASubBrace(SkewBraceError):
    pass


class NotACongruence(SkewBraceError):
    pass


class OrderCapExceeded(SkewBraceError):
    def __init__(self, order, cap, what):
        self.order = order
        self.cap = cap
        super().__init__(
            f"{what}: order {order} exceeds cap {cap} (raise it with SKB_ORDER_CAP)"
        )


class BadSpec(SkewBraceError):
    pass


class ParseError(SkewBraceError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class ValidationError(SkewBraceError):
    def __init__(self, reason, detail=None):
        self.reason = reason
        self.detail = detail
        msg = reason if detail is None else f"{reason}: {detail}"
        super().__init__(msg)
