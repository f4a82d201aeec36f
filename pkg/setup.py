"""Build script for the optional compiled kernels.

The package works without the extension (a pure-Python twin of every kernel
ships alongside it), so a failed compile downgrades to a warning instead of
breaking the install.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build extensions if possible; fall back to pure Python otherwise."""

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
            "WARNING: could not build the compiled kernels "
            f"({exc!r}); falling back to the pure-Python backend."
        )


def extensions():
    from Cython.Build import cythonize

    ext = Extension(
        "comsig._kernels_cy",
        ["src/comsig/_kernels_cy.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
