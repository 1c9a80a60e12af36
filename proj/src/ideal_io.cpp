#include "gorfro/ideal_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gorfro {

namespace {

struct LineParser {
    LineParser(const std::string& line, std::size_t nvars, FieldSpec fs)
        : s_(line), nvars_(nvars), fs_(fs) {}

    Polynomial parse() {
        Polynomial p(nvars_, fs_);
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        p += parse_term(negative);
        skip_ws();
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            p += parse_term(c == '-');
            skip_ws();
        }
        return p;
    }

private:
    Polynomial parse_term(bool negative) {
        long coeff = 1;
        Monomial mono = Monomial::one(nvars_);
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff *= parse_int();
            } else if (peek() == 'x') {
                ++pos_;
                long idx = parse_int();
                if (idx < 0 || static_cast<std::size_t>(idx) >= nvars_)
                    fail("variable index out of range: x" + std::to_string(idx));
                long e = 1;
                skip_ws();
                if (peek() == '^') {
                    ++pos_;
                    skip_ws();
                    e = parse_int();
                    if (e < 0) fail("negative exponent");
                }
                std::vector<std::uint32_t> exps(nvars_, 0);
                exps[static_cast<std::size_t>(idx)] = static_cast<std::uint32_t>(e);
                mono = mono * Monomial(std::move(exps));
            } else {
                fail("expected a coefficient or a variable");
            }
            saw_factor = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!saw_factor) fail("empty term");
        if (negative) coeff = -coeff;
        Polynomial t(nvars_, fs_);
        t.add_term(mono, FieldElement::integer(coeff, fs_));
        return t;
    }

    long parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::stol(s_.substr(start, pos_ - start));
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error("ideal parse error at column " + std::to_string(pos_ + 1) +
                                 ": " + msg + " in '" + s_ + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    std::size_t nvars_;
    FieldSpec fs_;
};

bool blank(const std::string& line) {
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

IdealFile read_ideal(std::istream& in, FieldSpec fs) {
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("ideal parse error: empty input, expected 'ring n=<count>'");
    std::istringstream header(line);
    std::string ring_kw, decl;
    header >> ring_kw >> decl;
    if (ring_kw != "ring" || decl.rfind("n=", 0) != 0)
        throw std::runtime_error("ideal parse error: first line must be 'ring n=<count>'");
    std::size_t nvars = 0;
    try {
        nvars = std::stoul(decl.substr(2));
    } catch (const std::exception&) {
        throw std::runtime_error("ideal parse error: bad variable count in '" + decl + "'");
    }

    IdealFile file;
    file.nvars = nvars;
    while (std::getline(in, line)) {
        if (blank(line)) continue;
        file.generators.push_back(LineParser(line, nvars, fs).parse());
    }
    return file;
}

IdealFile read_ideal_file(const std::string& path, FieldSpec fs) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ideal file: " + path);
    return read_ideal(in, fs);
}

void write_ideal(std::ostream& out, std::size_t nvars,
                 const std::vector<Polynomial>& generators) {
    out << "ring n=" << nvars << "\n";
    for (const auto& g : generators) out << g.str() << "\n";
}

std::string ideal_to_string(std::size_t nvars, const std::vector<Polynomial>& generators) {
    std::ostringstream os;
    write_ideal(os, nvars, generators);
    return os.str();
}

} // namespace gorfro
