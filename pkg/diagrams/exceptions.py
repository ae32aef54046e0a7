class MalformedDiagram(ValueError):
    pass


class InvariantBreach(AssertionError):
    """
    A property every diagram of the calculus satisfies has failed.

    ``witnesses`` holds the offending diagrams so sweeps can report them.
    """

    def __init__(self, message, *witnesses):
        super().__init__(message)
        self.message = str(message)
        self.witnesses = witnesses
