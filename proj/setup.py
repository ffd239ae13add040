import subprocess
from pathlib import Path

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ROOT = Path(__file__).parent


def eigen_include():
    try:
        out = subprocess.run(
            ["pkg-config", "--cflags-only-I", "eigen3"],
            capture_output=True,
            text=True,
            check=True,
        ).stdout
        for token in out.split():
            if token.startswith("-I"):
                return token[2:]
    except (OSError, subprocess.CalledProcessError):
        pass
    return "/usr/include/eigen3"


sources = sorted(
    str(p.relative_to(ROOT)) for p in (ROOT / "src").glob("*.cc") if p.name != "main.cc"
)
sources.append("python/module.cc")

setup(
    ext_modules=[
        Pybind11Extension(
            "framecoh._framecoh",
            sources,
            include_dirs=["include", "vendor", eigen_include()],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
