"""Build script: compiles the optional walk-sampling kernel.

The package is fully functional without the extension; if the build fails
(no compiler, no Cython) we warn and fall back to the pure-Python kernel
selected at import time in heckewalk.walk.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Treat extension build failures as a warning, not an error."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing entirely
            warnings.warn(f"building the compiled walk kernel failed ({exc}); "
                          "falling back to the pure-Python sampler")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"building {ext.name} failed ({exc}); "
                          "falling back to the pure-Python sampler")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("heckewalk._walk_core", ["src/heckewalk/_walk_core.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    warnings.warn("Cython not available; skipping the compiled walk kernel")
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": OptionalBuildExt})
