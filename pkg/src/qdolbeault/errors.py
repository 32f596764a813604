class QDolbeaultError(Exception):
    pass


class DegreeBoundExceeded(QDolbeaultError):
    def __init__(self, degree, bound):
        super().__init__(
            "one-sided word of degree %d exceeds the degree bound %d" % (degree, bound))
        self.degree = degree
        self.bound = bound


class UnsupportedInput(QDolbeaultError):
    pass


class InternalInconsistency(QDolbeaultError):
    pass


class NotLevi(QDolbeaultError):
    pass


class ConfigurationError(QDolbeaultError):
    pass
