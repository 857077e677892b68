#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "padic/presentation.hpp"

namespace padic {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line;
  std::size_t column;
};

/// Parses one presentation:
///
///   poly p=2 [1, 3]            coefficients low degree first, a/b allowed
///   affine p=2 a=1 b=3         f(x) = a + b x
///   automaton machine.json     transducer file
///   vdp series.json            van der Put series file
///
/// Relative file names are resolved against `dir`.
FunctionPresentation parse_presentation(std::string_view text,
                                        const std::filesystem::path& dir = {});

/// Reads a presentation from a JSON file: a transducer, or a vdp series
/// (recognized by its "K" field). Series files may carry "tail": "zero"
/// (the default) or "truncated".
FunctionPresentation load_presentation_file(const std::filesystem::path& path);

}  // namespace padic
