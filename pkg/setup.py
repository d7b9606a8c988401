import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the C accelerator if the toolchain allows; otherwise install anyway.

    The package runs on the pure-Python kernels when the extension is missing,
    so a failed compile must not abort the install.
    """

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler or cythonize failure
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"WARNING: building cantorkit._extrema failed ({exc}); "
            "falling back to the pure-Python kernels",
            file=sys.stderr,
        )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "cantorkit._extrema",
        ["src/cantorkit/_extrema.pyx"],
        extra_compile_args=["-O2"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
