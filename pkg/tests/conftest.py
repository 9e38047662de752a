import sympy
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SYM = {n: sympy.Symbol(n) for n in ("a", "b", "x", "y", "omega")}


def to_sympy(s):
    """Our printed form into sympy; ``^`` becomes ``**``."""
    return sympy.sympify(str(s).replace("^", "**"), locals=SYM)


# criterion number -> (passed, one-line detail); filled by test_acceptance.py
ACCEPTANCE: dict = {}


def report(n: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[n] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
