from fractions import Fraction
import jsonpickle


def rational_str(value) -> str:
    """Exact rational as "p/q" (or "p" when integral)."""
    return str(Fraction(value))


class JsonSerialize:

    def to_json_dict(self):
        return self.__dict__

    def json(self, indent=None):
        return jsonpickle.encode(self.to_json_dict(), unpicklable=False, indent=indent)
