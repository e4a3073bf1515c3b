import subprocess
import sys
from pathlib import Path

import pybind11
from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        extdir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)
        source_dir = Path(__file__).parent.resolve()
        cmake_args = [
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={extdir}",
            f"-DPython_EXECUTABLE={sys.executable}",
            f"-Dpybind11_DIR={pybind11.get_cmake_dir()}",
            "-DMCQ_BUILD_PYTHON=ON",
            "-DCMAKE_BUILD_TYPE=Release",
        ]
        subprocess.run(["cmake", str(source_dir), *cmake_args],
                       cwd=build_temp, check=True)
        subprocess.run(["cmake", "--build", ".", "--target", "_mcq", "-j4"],
                       cwd=build_temp, check=True)


setup(
    packages=["mcqlib"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("mcqlib._mcq")],
    cmdclass={"build_ext": CMakeBuild},
)
