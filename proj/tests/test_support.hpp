#ifndef MOTZKIN_TEST_SUPPORT_HPP
#define MOTZKIN_TEST_SUPPORT_HPP

#include <initializer_list>
#include <vector>

#include "motzkin/algebra.hpp"

namespace motzkin::test {

inline std::vector<Integer> ints(std::initializer_list<long> v) {
    std::vector<Integer> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

inline Series ser(std::initializer_list<long> v, std::size_t order) {
    std::vector<Rational> c;
    for (long x : v) c.emplace_back(x);
    c.resize(order);
    return Series(c, order);
}

inline Series from_ints(const std::vector<Integer>& v) {
    return Series(std::vector<Rational>(v.begin(), v.end()), v.size());
}

inline std::vector<Integer> head(const std::vector<Integer>& v, std::size_t n) {
    return std::vector<Integer>(v.begin(), v.begin() + static_cast<long>(std::min(n, v.size())));
}

}  // namespace motzkin::test

#endif  // MOTZKIN_TEST_SUPPORT_HPP
