#pragma once

#include <stdexcept>
#include <string>

namespace unrx {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct factorization_budget_exceeded : error {
    explicit factorization_budget_exceeded(const std::string& what) : error(what) {}
};

struct non_coprime_moduli : error {
    explicit non_coprime_moduli(const std::string& what) : error(what) {}
};

struct leading_drop : error {
    explicit leading_drop(const std::string& what) : error(what) {}
};

struct not_irreducible : error {
    explicit not_irreducible(const std::string& what) : error(what) {}
};

struct closure_overflow : error {
    explicit closure_overflow(const std::string& what) : error(what) {}
};

struct not_transposition : error {
    explicit not_transposition(const std::string& what) : error(what) {}
};

struct not_group_element : error {
    explicit not_group_element(const std::string& what) : error(what) {}
};

struct bad_congruence : error {
    explicit bad_congruence(const std::string& what) : error(what) {}
};

struct not_coprime : error {
    explicit not_coprime(const std::string& what) : error(what) {}
};

struct precondition_unmet : error {
    explicit precondition_unmet(const std::string& what) : error(what) {}
};

struct not_generic : error {
    explicit not_generic(const std::string& what) : error(what) {}
};

struct dependent_forms : error {
    explicit dependent_forms(const std::string& what) : error(what) {}
};

struct search_exhausted : error {
    explicit search_exhausted(const std::string& what) : error(what) {}
};

struct usage_error : error {
    explicit usage_error(const std::string& what) : error(what) {}
};

}  // namespace unrx
