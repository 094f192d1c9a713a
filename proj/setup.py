"""Builds the _core extension through the project's CMake tree."""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        out_dir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        source_dir = Path(__file__).parent.resolve()

        configure = [
            "cmake",
            "-S", str(source_dir),
            "-B", str(build_dir),
            "-DCMAKE_BUILD_TYPE=Release",
            "-DHYPERCONIC_BUILD_TESTING=OFF",
            f"-DPython3_EXECUTABLE={sys.executable}",
        ]
        subprocess.run(configure, check=True)
        jobs = str(os.cpu_count() or 2)
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_core",
             "--parallel", jobs],
            check=True,
        )

        built = build_dir / "python" / "hyperconic"
        out_dir.mkdir(parents=True, exist_ok=True)
        for artifact in built.glob("_core*"):
            self.copy_file(str(artifact), str(out_dir / artifact.name))


setup(
    packages=["hyperconic"],
    package_dir={"hyperconic": "python/hyperconic"},
    ext_modules=[CMakeExtension("hyperconic._core")],
    cmdclass={"build_ext": CMakeBuild},
)
