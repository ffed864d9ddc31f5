"""Build hook: compile the optional kernel extension when Cython and a C
toolchain are available, fall back to the pure-Python kernels otherwise.

The package is fully functional without the extension; `dunklops._backend`
picks whichever lane imported successfully.
"""

from setuptools import setup

ext_modules = []
cmdclass = {}

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/dunklops/_kernels_cy.pyx"],
        language_level="3",
    )
except Exception:
    ext_modules = []

if ext_modules:
    from setuptools.command.build_ext import build_ext

    class OptionalBuildExt(build_ext):
        """Swallow compiler failures so installs never hard-require a C
        toolchain."""

        def run(self):
            try:
                super().run()
            except Exception:
                self.extensions = []

        def build_extension(self, ext):
            try:
                super().build_extension(ext)
            except Exception:
                pass

    cmdclass["build_ext"] = OptionalBuildExt

setup(ext_modules=ext_modules, cmdclass=cmdclass)
