import os
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]


def _backend(env_value):
    env = dict(os.environ)
    env.pop("RP3SKEIN_PURE_PYTHON", None)
    if env_value is not None:
        env["RP3SKEIN_PURE_PYTHON"] = env_value
    out = subprocess.run([sys.executable, "-c", "import rp3skein; print(rp3skein.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    return out.stdout.strip()


def test_fallback_selected_by_environment():
    assert _backend("1") == "python"
    assert _backend(None) in ("python", "cython")


def test_benchmark_backends_agree():
    out = subprocess.run([sys.executable, str(ROOT / "benchmarks" / "bench_kernels.py"),
                          "--count", "4", "--max-crossings", "3"],
                         capture_output=True, text=True)
    assert out.returncode == 0, out.stderr
    assert "values identical across backends: True" in out.stdout
