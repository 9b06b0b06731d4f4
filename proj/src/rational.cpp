#include "valfactor/rational.hpp"

#include <cctype>

#include "valfactor/errors.hpp"

namespace valfactor {

std::string rat_to_string(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class rat_from_string(const std::string& s) {
    const auto bad = [&] {
        return input_error("malformed rational \"" + s + "\", expected \"p/q\"");
    };
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) throw bad();
    if (i >= s.size() || s[i] != '/') throw bad();
    std::size_t den_begin = ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_begin || i != s.size()) throw bad();

    mpz_class num(s.substr(0, den_begin - 1), 10);
    mpz_class den(s.substr(den_begin), 10);
    if (den == 0) throw input_error("zero denominator in rational \"" + s + "\"");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

} // namespace valfactor
