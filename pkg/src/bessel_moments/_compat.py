import sys

if sys.version_info >= (3, 12):
    from typing import Self, TypeAlias, Unpack
else:
    from typing_extensions import Self, TypeAlias, Unpack  # noqa: F401
