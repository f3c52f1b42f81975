from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

# The extension compiles the core sources directly; the CMake tree builds the
# same module through bindings/ for C++-side development.
ext = Pybind11Extension(
    "uflp._core",
    sources=[
        "bindings/module.cpp",
        "src/instance.cpp",
        "src/eval.cpp",
        "src/search.cpp",
        "src/exact.cpp",
        "src/stats.cpp",
        "src/experiment.cpp",
    ],
    include_dirs=["include"],
    cxx_std=20,
    extra_compile_args=["-pthread"],
    extra_link_args=["-pthread"],
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
