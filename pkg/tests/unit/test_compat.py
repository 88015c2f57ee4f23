from bessel_moments import _compat


def test_compat_exports():
    exported = {name for name in vars(_compat) if not name.startswith("_") and name != "sys"}
    assert exported == {"Self", "TypeAlias", "Unpack"}
