#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gorfro/polynomial.hpp"

namespace gorfro {

struct IdealFile {
    std::size_t nvars = 0;
    std::vector<Polynomial> generators;
};

/// Ideal text format: first line `ring n=<count>`, then one polynomial per
/// line in variables x0..x{n-1} with integer coefficients, `*` for product
/// and `^` for power, e.g. `x0*x2 - x1^2`.
IdealFile read_ideal(std::istream& in, FieldSpec fs);
IdealFile read_ideal_file(const std::string& path, FieldSpec fs);

void write_ideal(std::ostream& out, std::size_t nvars,
                 const std::vector<Polynomial>& generators);
std::string ideal_to_string(std::size_t nvars, const std::vector<Polynomial>& generators);

} // namespace gorfro
