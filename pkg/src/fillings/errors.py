class IllegalMove(ValueError):
    pass


class OracleIndecisive(RuntimeError):
    pass


class BallTooSmall(RuntimeError):
    pass


class NotNullHomotopic(ValueError):
    pass
