#include <pybind11/pybind11.h>
PYBIND11_MODULE(_equitri, m) { m.doc() = "equivariant triangulation toolkit"; }
