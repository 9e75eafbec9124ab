#pragma once

#include <stdexcept>
#include <string>

#include "qsusp/ncpoly.hpp"
#include "qsusp/poisson.hpp"

namespace qsusp {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Expression grammar:
///   expr   := ["-"] term (("+"|"-") term)*
///   term   := factor (("*" factor) | factor)*     (juxtaposition multiplies)
///   factor := atom ("^" uint)?
///   atom   := gen | scalar | "(" expr ")" | "[" expr "," expr "]" | "{" expr "," expr "}"
///   gen    := ("a"|"x"|"z"|"alpha"|"tau") uint "*"? | "t" | "y"
///   scalar := rational | "q" ("^" int)?
/// A "*" attached directly to an indexed generator is the involution;
/// separated by whitespace it multiplies.

/// Evaluates into the quantum preset; "[f,g]" is the commutator and "{,}"
/// is rejected.
NCPoly parse_quantum(const std::string& text, const AlgebraPreset& A);

/// Evaluates into the classical structure; "{f,g}" is the Poisson bracket
/// and "[,]" is rejected.
ClassicalPoly parse_classical(const std::string& text, const PoissonStructure& P);

}  // namespace qsusp
