from dataclasses import dataclass


@dataclass
class OpCounter:
    """Tally of elementary generator operations.

    ``steps`` counts recursive calls, loop iterations and state writes made
    while producing output; ``preprocessing`` holds one-off setup work
    (array initialisation, parameter scans) that is allowed to be O(n).
    """

    steps: int = 0
    outputs: int = 0
    preprocessing: int = 0

    @property
    def ratio(self) -> float:
        return self.steps / max(1, self.outputs)


class StopTraversal(Exception):
    """Raised by a visit callback to end a traversal early."""
