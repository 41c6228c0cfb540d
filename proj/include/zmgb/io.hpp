#ifndef ZMGB_IO_HPP
#define ZMGB_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zmgb/vanishing.hpp"

namespace zmgb {

/// A coefficient ring plus named, ordered variables; the printable face of
/// (Z/m)[x_1..x_n]. Names are unique identifiers ([A-Za-z][A-Za-z0-9_]*).
class RingContext {
public:
    RingContext(Modulus m, std::vector<std::string> names);

    const Modulus& modulus() const { return modulus_; }
    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }

    /// Index of a variable name, or nvars() when absent.
    std::size_t index_of(std::string_view name) const;

private:
    Modulus modulus_;
    std::vector<std::string> names_;
};

/// Parse failure carrying the 0-based byte offset of the offending input;
/// what() repeats the offset in text form.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset);

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Parses
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' natural)?
///   base   := natural | identifier | '(' expr ')'
/// Whitespace is insignificant, multiplication is always explicit, unary
/// minus is legal only at the head of an expression ("x - -1" is a syntax
/// error). Literals of any size are reduced mod m; a literal exponent above
/// 10^6 is rejected.
Polynomial parse_poly(std::string_view text, const RingContext& ctx);

/// Canonical text form: terms descending under the order, joined by " + ",
/// coefficient 1 elided except on the constant term, "0" for zero. Output
/// parses back to the same polynomial.
std::string format_poly(const Polynomial& f, const RingContext& ctx,
                        MonomialOrder order = MonomialOrder::lex);

/// JSON document {"version":1, "modulus":"<decimal>", "nvars":n,
/// "entries":[{"alpha":[..], "a":"<decimal>"}, ..]} with entries in
/// canonical order and big integers as decimal strings.
std::string serialize_basis(const GroebnerBasis& basis);

/// Inverse of serialize_basis. Rejects malformed documents and unsupported
/// versions; every entry is re-validated against the membership conditions
/// rather than trusted, so a stale or corrupted document cannot smuggle in
/// a non-basis pair.
GroebnerBasis deserialize_basis(std::string_view text);

} // namespace zmgb

#endif
