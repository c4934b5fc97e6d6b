#include "riordan/rational.hpp"

#include <cctype>

#include "riordan/error.hpp"

namespace riordan {

Rat rat_from_string(const std::string& text) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    const std::string body = text.substr(begin, end - begin);
    if (body.empty()) throw ParseError("empty rational", begin);

    mpq_t value;
    mpq_init(value);
    if (mpq_set_str(value, body.c_str(), 10) != 0) {
        mpq_clear(value);
        throw ParseError("malformed rational '" + body + "'", begin);
    }
    if (mpz_sgn(mpq_denref(value)) == 0) {
        mpq_clear(value);
        throw ParseError("zero denominator in '" + body + "'", begin);
    }
    mpq_canonicalize(value);
    Rat result(value);
    mpq_clear(value);
    return result;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

}  // namespace riordan
