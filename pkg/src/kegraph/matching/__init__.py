"""Maximum matchings, their enumeration and matching-relative structures."""

from .augment import *  # noqa: F401,F403
from .engine import *  # noqa: F401,F403
from .enumerate import *  # noqa: F401,F403
from .forbidden import *  # noqa: F401,F403
from .structures import *  # noqa: F401,F403
