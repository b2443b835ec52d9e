from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "wtrees._core",
    sources=[
        "src/py_module.cpp",
        "src/rational.cpp",
        "src/type.cpp",
        "src/tree.cpp",
        "src/canonical.cpp",
        "src/enumerate.cpp",
        "src/counting.cpp",
        "src/qpoly.cpp",
        "src/avsystem.cpp",
        "src/solve.cpp",
        "src/io.cpp",
        "src/verify.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
