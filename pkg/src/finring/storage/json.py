import json
from typing import Any

import numpy as np


class FinringEncoder(json.JSONEncoder):
    """Uses the "default" encoder unless the object implements an encode_json method, in which case
    the object returned by encode_json is encoded instead.  numpy scalars and arrays become plain
    ints, bools and lists."""

    def default(self, obj: Any) -> Any:
        if hasattr(obj, "encode_json"):
            return obj.encode_json()
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.bool_):
            return bool(obj)
        if isinstance(obj, np.ndarray):
            return obj.tolist()

        return super().default(obj)


def dumps(obj: Any) -> str:
    """Stable, indented JSON; the same object always gives the same text."""
    return json.dumps(obj, cls=FinringEncoder, indent=2, ensure_ascii=False)
