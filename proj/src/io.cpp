#include "zmgb/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>

#include <json.hpp>

namespace zmgb {

namespace {

constexpr std::uint32_t kMaxLiteralExponent = 1'000'000;

bool ident_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool ident_cont(char c) {
    return ident_start(c) || (c >= '0' && c <= '9') || c == '_';
}

} // namespace

RingContext::RingContext(Modulus m, std::vector<std::string> names)
    : modulus_(std::move(m)), names_(std::move(names)) {
    if (names_.empty())
        throw std::invalid_argument("ring context needs at least one variable");
    for (const std::string& name : names_) {
        if (name.empty() || !ident_start(name.front()) ||
            !std::all_of(name.begin() + 1, name.end(), ident_cont))
            throw std::invalid_argument("invalid variable name '" + name + "'");
    }
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw std::invalid_argument("duplicate variable name '" + names_[i] + "'");
}

std::size_t RingContext::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return names_.size();
}

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

namespace {

Polynomial poly_pow(Polynomial base, std::uint32_t k) {
    Polynomial result = Polynomial::constant(base.modulus(), base.nvars(), 1);
    while (k != 0) {
        if (k & 1u)
            result = result * base;
        k >>= 1u;
        if (k != 0)
            base = base * base;
    }
    return result;
}

class Parser {
public:
    Parser(std::string_view text, const RingContext& ctx) : text_(text), ctx_(ctx) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail(std::string("unexpected character '") + text_[pos_] + "'");
        return p;
    }

private:
    std::string_view text_;
    const RingContext& ctx_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ == text_.size();
    }

    /// Consumes c if it is the next non-space character.
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& message) { throw ParseError(message, pos_); }

    Polynomial expr() {
        bool negated = accept('-');
        Polynomial acc = term();
        if (negated)
            acc = -acc;
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (accept('*'))
            acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (accept('^'))
            return poly_pow(std::move(b), exponent());
        return b;
    }

    Polynomial base() {
        if (at_end())
            fail("unexpected end of input");
        const char c = text_[pos_];
        if (c >= '0' && c <= '9')
            return Polynomial::constant(ctx_.modulus(), ctx_.nvars(), natural());
        if (ident_start(c)) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && ident_cont(text_[pos_]))
                ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            const std::size_t i = ctx_.index_of(name);
            if (i == ctx_.nvars())
                throw ParseError("unknown variable '" + std::string(name) + "'", start);
            return Polynomial::variable(ctx_.modulus(), ctx_.nvars(), i);
        }
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')'))
                fail("expected ')'");
            return inner;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Int natural() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
            ++pos_;
        return Int(std::string(text_.substr(start, pos_ - start)), 10);
    }

    std::uint32_t exponent() {
        skip_ws();
        if (pos_ == text_.size() || text_[pos_] < '0' || text_[pos_] > '9')
            fail("expected exponent after '^'");
        const std::size_t start = pos_;
        const Int raw = natural();
        if (raw > kMaxLiteralExponent)
            throw ParseError("exponent overflow", start);
        return static_cast<std::uint32_t>(raw.get_ui());
    }
};

} // namespace

Polynomial parse_poly(std::string_view text, const RingContext& ctx) {
    return Parser(text, ctx).run();
}

std::string format_poly(const Polynomial& f, const RingContext& ctx, MonomialOrder order) {
    if (f.is_zero())
        return "0";

    std::vector<const ExponentVector*> alphas;
    alphas.reserve(f.term_count());
    for (const auto& [alpha, coeff] : f.terms())
        alphas.push_back(&alpha);
    std::sort(alphas.begin(), alphas.end(),
              [order](const ExponentVector* a, const ExponentVector* b) {
                  return order_compare(order, *a, *b) > 0;
              });

    std::string out;
    for (const ExponentVector* alpha : alphas) {
        if (!out.empty())
            out += " + ";
        const Int& coeff = f.terms().at(*alpha);
        std::vector<std::string> pieces;
        if (coeff != 1 || alpha->total_degree() == 0)
            pieces.push_back(coeff.get_str());
        for (std::size_t i = 0; i < alpha->size(); ++i) {
            if ((*alpha)[i] == 0)
                continue;
            std::string piece = ctx.names()[i];
            if ((*alpha)[i] > 1)
                piece += "^" + std::to_string((*alpha)[i]);
            pieces.push_back(std::move(piece));
        }
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            if (i != 0)
                out += "*";
            out += pieces[i];
        }
    }
    return out;
}

std::string serialize_basis(const GroebnerBasis& basis) {
    nlohmann::ordered_json doc;
    doc["version"] = 1;
    doc["modulus"] = basis.modulus().value().get_str();
    doc["nvars"] = basis.nvars();
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const BasisEntry& e : basis.entries()) {
        nlohmann::ordered_json entry;
        entry["alpha"] = e.alpha.entries();
        entry["a"] = e.a.get_str();
        entries.push_back(std::move(entry));
    }
    doc["entries"] = std::move(entries);
    return doc.dump(2);
}

namespace {

[[noreturn]] void malformed(const std::string& detail) {
    throw std::runtime_error("malformed basis document: " + detail);
}

Int decimal_field(const nlohmann::json& j, const char* field) {
    if (!j.is_string())
        malformed(std::string(field) + " must be a decimal string");
    try {
        return Int(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
        malformed(std::string(field) + " is not a decimal integer");
    }
}

} // namespace

GroebnerBasis deserialize_basis(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        malformed(e.what());
    }

    if (!doc.is_object() || !doc.contains("version") || !doc["version"].is_number_integer())
        malformed("missing integer field \"version\"");
    if (doc["version"] != 1)
        malformed("unsupported version " + doc["version"].dump());
    if (!doc.contains("modulus") || !doc.contains("nvars") || !doc.contains("entries"))
        malformed("missing field \"modulus\", \"nvars\" or \"entries\"");

    const Int m_value = decimal_field(doc["modulus"], "modulus");
    if (m_value < 2)
        malformed("modulus must be >= 2");
    const Modulus m(m_value);

    if (!doc["nvars"].is_number_unsigned() || doc["nvars"] == 0)
        malformed("nvars must be a positive integer");
    const std::size_t nvars = doc["nvars"].get<std::size_t>();

    if (!doc["entries"].is_array())
        malformed("\"entries\" must be an array");
    std::vector<BasisEntry> entries;
    for (const nlohmann::json& je : doc["entries"]) {
        if (!je.is_object() || !je.contains("alpha") || !je.contains("a") ||
            !je["alpha"].is_array())
            malformed("each entry needs an \"alpha\" array and an \"a\" string");
        if (je["alpha"].size() != nvars)
            malformed("entry alpha length disagrees with nvars");
        std::vector<std::uint32_t> alpha;
        for (const nlohmann::json& v : je["alpha"]) {
            if (!v.is_number_integer() || v < 0 ||
                v > std::numeric_limits<std::uint32_t>::max())
                malformed("alpha entries must be naturals");
            alpha.push_back(v.get<std::uint32_t>());
        }
        entries.push_back(
            BasisEntry{ExponentVector(std::move(alpha)), decimal_field(je["a"], "a")});
    }

    for (const BasisEntry& e : entries) {
        if (!in_S(m, e.alpha, e.a)) {
            std::string desc = "(";
            for (std::size_t i = 0; i < e.alpha.size(); ++i)
                desc += (i ? "," : "") + std::to_string(e.alpha[i]);
            desc += "), a = " + e.a.get_str();
            throw std::runtime_error("basis entry failed re-validation: alpha = " + desc);
        }
    }

    return GroebnerBasis(m, nvars, std::move(entries));
}

} // namespace zmgb
