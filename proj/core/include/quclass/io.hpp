#pragma once

#include <string>
#include <vector>

#include "quclass/linalg.hpp"
#include "quclass/mub.hpp"
#include "quclass/operator_basis.hpp"
#include "quclass/states.hpp"

namespace quclass::io {

/// %.15g, with −0 printed as 0.
std::string format_number(double x);
/// x rounded to 15 significant digits (so JSON dumps stay short and stable).
double round15(double x);

/// Throws FormatError when the file cannot be read or written.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// JSON. Matrices are {"re": [[...]], "im": [[...]]}. Indices are 0-based.
std::string matrix_to_json(const CMat& m);
CMat matrix_from_json(const std::string& text);

/// {"n": n, "bases": [basis][vector][component] = [re, im]}
std::string mub_to_json(const mub::MubFamily& m);
mub::MubFamily mub_from_json(const std::string& text);

/// {"n": n, "families": [[i, ...], ...], "ops": [matrix, ...]}
std::string basis_to_json(const basis::OperatorBasis& b);
basis::OperatorBasis basis_from_json(const std::string& text, const std::string& label = "loaded");

/// {"kind": "density", "mat": matrix} or {"kind": "bloch", "theta": [...]}
struct StateFile {
  enum class Kind { Density, Bloch } kind = Kind::Density;
  CMat mat;                   // Density
  states::BlochVector theta;  // Bloch
};

StateFile state_from_json(const std::string& text);
std::string state_to_json(const StateFile& s);

/// Header line and rows joined with commas, LF terminated.
std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

}  // namespace quclass::io
