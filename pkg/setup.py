import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None


class optional_build_ext(build_ext):
    """Build the kernels if possible; the package falls back to pure Python otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"WARNING: compiled kernels not built ({exc}); using pure Python", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover
            print(f"WARNING: failed to build {ext.name} ({exc})", file=sys.stderr)


ext_modules = []
if cythonize is not None:
    # no -ffast-math or FMA contraction: loop order and rounding are part of the contract
    args = [] if sys.platform == "win32" else ["-O3", "-ffp-contract=off"]
    ext_modules = cythonize(
        [Extension("fastent._ckernels", ["src/fastent/_ckernels.pyx"], include_dirs=["src/fastent"],
                   depends=["src/fastent/_lanes.h"], extra_compile_args=args)],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
