import os
import subprocess
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        extdir = os.path.abspath(os.path.dirname(self.get_ext_fullpath(ext.name)))
        build_dir = os.path.abspath(self.build_temp)
        os.makedirs(build_dir, exist_ok=True)
        cfg = "Debug" if self.debug else "Release"
        subprocess.run(
            [
                "cmake",
                "-S",
                os.path.dirname(os.path.abspath(__file__)),
                "-B",
                build_dir,
                f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={extdir}",
                f"-DCMAKE_BUILD_TYPE={cfg}",
                f"-DPython_EXECUTABLE={sys.executable}",
                "-DSKBUILD=ON",  # binding-only build: skip the CLI and test targets
            ],
            check=True,
        )
        subprocess.run(["cmake", "--build", build_dir, "--target", "_core", "-j"], check=True)


setup(
    ext_modules=[CMakeExtension("curvmod._core")],
    cmdclass={"build_ext": CMakeBuild},
)
