#pragma once

#include <string>

#include "cli/seedfile.hpp"
#include "tropf/seeds.hpp"

namespace fixture {

inline std::string data(const std::string& name) { return std::string(TROPF_TEST_DATA) + "/" + name; }

inline tropf::RootConfig load(const std::string& name) { return tropf::cli::load_seed_file(data(name)); }

inline tropf::RootConfig a2_principal() { return load("a2_principal.json"); }
inline tropf::RootConfig a2_free() { return load("a2_coefficient_free.json"); }
inline tropf::RootConfig b2_principal() { return load("b2_principal.json"); }
inline tropf::RootConfig a3_principal() { return load("a3_principal.json"); }
inline tropf::RootConfig markov_principal() { return load("markov_principal.json"); }

inline tropf::LaurentPoly x(std::size_t m, std::size_t i1) { return tropf::LaurentPoly::variable(m, i1 - 1); }

}  // namespace fixture
