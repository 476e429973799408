class InputError(ValueError):
    """Malformed graph, list assignment, pin or parameter."""


class BudgetExceeded(RuntimeError):
    """An exhaustive search visited more nodes than it was allowed to."""

    def __init__(self, budget, visited):
        super().__init__(f"search budget of {budget} nodes exhausted after {visited} nodes")
        self.budget = budget
        self.visited = visited
