"""Builds the packcov._core extension straight from the C++ sources.

The CMake build remains the canonical one for C++ development and tests;
this compiles the same files so the wheel needs nothing beyond setuptools
and pybind11.
"""

from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "packcov._core",
    sorted(glob("src/*.cpp")) + ["bindings/module.cpp"],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
