"""Build hook for the optional compiled enumeration engine.

The package is fully functional without the extension; if Cython or a C
compiler is unavailable the build falls back to the pure-Python engine.
"""
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the speedup extension, but never fail the install over it."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "warning: building the treegen._speedups extension failed (%s); "
            "falling back to the pure-Python engine" % exc,
            file=sys.stderr,
        )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print(
            "warning: Cython not available; installing without the compiled "
            "engine",
            file=sys.stderr,
        )
        return []
    return cythonize(
        [Extension("treegen._speedups", ["src/treegen/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
