class ResampleBudgetExhaustedException(Exception):
    pass


class ResampleBudget:
    def __init__(self, allowance=1):
        self.allowance = allowance
        self.used = 0

    @property
    def remaining(self):
        return self.allowance - self.used

    def approve(self):
        if self.used >= self.allowance:
            raise ResampleBudgetExhaustedException()
        self.used = self.used + 1
