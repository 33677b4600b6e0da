"""Smoke test for the shephard_py extension.

Build first with `cargo build -p shephard-py --release`; the script loads the
shared library straight from target/ unless shephard_py is already importable.
"""

import importlib.machinery
import importlib.util
import json
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load():
    try:
        import shephard_py

        return shephard_py
    except ImportError:
        pass
    for profile in ("release", "debug"):
        for suffix in ("so", "dylib"):
            lib = ROOT / "target" / profile / f"libshephard_py.{suffix}"
            if lib.exists():
                loader = importlib.machinery.ExtensionFileLoader("shephard_py", str(lib))
                spec = importlib.util.spec_from_loader("shephard_py", loader)
                module = importlib.util.module_from_spec(spec)
                loader.exec_module(module)
                return module
    sys.exit("shephard_py not built; run: cargo build -p shephard-py --release")


PENTAGON = "\n".join(
    [f"vertex v{i} 3" for i in range(5)] + [f"edge v{i} v{(i + 1) % 5} 6" for i in range(5)]
)


def main():
    sh = load()

    c = json.loads(sh.classify(3, 6, 3))
    assert c["classification"]["regime"] == "euclidean", c["classification"]
    assert c["schemaVersion"] == 1
    assert json.loads(sh.classify(2, 4, 3))["finite"]["applies"] == "yes"

    s = sh.Session(3, 6, 3)
    assert s.is_trivial("s^3")
    assert s.are_equal("s t s t s t", "t s t s t s")
    assert not s.is_trivial("s t")
    assert s.element_order("s t") is None
    assert s.element_order("t s t^-1") == 3
    nf = json.loads(s.normal_form("s t s t s t"))
    assert nf["zExponent"] == 1 and nf["deltaIsIdentity"], nf

    g = json.loads(sh.girth(3, 6, 3))
    assert g["certified"] and g["bound"] == 12, g

    vertices, edges, girth, bipartite = sh.theta_hat(3, 6, 3, 8)
    assert bipartite and girth == 12, (vertices, edges, girth)

    r = json.loads(sh.report(PENTAGON))
    assert r["relativelyHyperbolic"]["applies"] == "yes"
    assert len(r["peripheralList"]) == 5
    assert sh.report(PENTAGON) == sh.report(PENTAGON)

    cert = json.loads(sh.certificate(PENTAGON, radius=6))
    assert cert["verdict"] == "certified-at-radius", cert["verdict"]

    try:
        sh.Session(1, 2, 3)
    except ValueError:
        pass
    else:
        raise AssertionError("label 1 accepted")

    print("shephard_py smoke test passed")


if __name__ == "__main__":
    main()
