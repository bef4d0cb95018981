#pragma once

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "iwahori/error.hpp"
#include "iwahori/rational.hpp"

#define EXPECT_ERROR_CODE(stmt, expected)                                            \
  do {                                                                               \
    try {                                                                            \
      stmt;                                                                          \
      ADD_FAILURE() << "no exception from " #stmt;                                   \
    } catch (const iwahori::Error& e) {                                              \
      EXPECT_EQ(e.code(), expected) << iwahori::to_string(e.code()) << ": " << e.what(); \
    }                                                                                \
  } while (0)

inline iwahori::RationalVector qv(const std::vector<std::string>& xs) {
  iwahori::RationalVector v;
  for (const auto& x : xs) v.push_back(iwahori::parse_rational(x));
  return v;
}

inline std::string test_data(const std::string& name) { return std::string(IWAHORI_TEST_DATA) + "/" + name; }
