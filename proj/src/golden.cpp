#include "ng/golden.hpp"

namespace ng::golden {

namespace {
const char* kSum = "⊕";

std::string z(std::initializer_list<uint64_t> factors) {
  std::string out;
  for (uint64_t f : factors) {
    if (!out.empty()) out += kSum;
    out += "Z_" + std::to_string(f);
  }
  return out;
}
}  // namespace

const std::vector<TableRow>& reutenauer_table() {
  static const std::vector<TableRow> table = {
      {2, 1, 1, z({1}), {1}},
      {3, 2, 1, z({1}), {1, 1}},
      {4, 3, 2, z({2}), {2, 1}},
      {5, 6, 3, z({3}), {3, 3}},
      {6, 9, 4, z({2, 2}), {4, 2, 2, 1}},
      {7, 18, 7, z({7}), {7, 7, 1, 1, 1, 1}},
      {8, 30, 16, z({2, 2, 4}), {16, 8, 4, 2}},
      {9, 56, 21, z({21}), {21, 21, 7, 7}},
      {10, 99, 48, z({2, 2, 2, 6}), {48, 24, 24, 3}},
      {11, 186, 93, z({93}), {93, 93}},
      {12, 335, 128, z({2, 2, 2, 4, 4}),
       {128, 64, 32, 32, 16, 16, 16, 8, 8, 4, 4, 4, 2, 1}},
      {13, 630, 315, z({315}), {315, 315}},
      {14, 1161, 448, z({2, 2, 2, 2, 2, 14}),
       {448, 224, 224, 56, 56, 28, 28, 28, 28, 8, 8, 7, 4, 4, 4, 4, 1, 1}},
      {15, 2182, 675, z({3, 15, 15}),
       {675, 675, 225, 225, 45, 45, 45, 45, 45, 45, 15, 15, 15, 15, 15, 15,
        3,   3,   3,   3,   3,  3,  1,  1,  1,  1}},
  };
  return table;
}

const std::vector<TableRow>& golomb_table() {
  static const std::vector<TableRow> table = {
      {2, 1, 1, z({1}), {1}},
      {3, 2, 2, z({2}), {2}},
      {4, 3, 2, z({2}), {2, 1}},
      {5, 6, 6, z({6}), {6}},
      {6, 9, 6, z({6}), {6, 2, 1}},
      {7, 18, 18, z({18}), {18}},
      {8, 30, 16, z({2, 8}), {16, 8, 4, 2}},
      {9, 56, 48, z({2, 24}), {48, 8}},
      {10, 99, 60, z({2, 30}), {60, 30, 6, 2, 1}},
      {11, 186, 176, z({2, 88}), {176, 8, 2}},
      {12, 335, 144, z({2, 6, 12}),
       {144, 48, 36, 24, 24, 12, 12, 8, 6, 6, 4, 4, 2, 2, 2, 1}},
  };
  return table;
}

const std::string& a9_text() {
  static const std::string text =
      "-1 1 0 0 0 0 0 0 0\n"
      "0 -2 1 1 0 0 0 0 0\n"
      "0 0 -2 0 1 1 0 0 0\n"
      "0 0 0 -2 0 0 1 1 0\n"
      "1 0 0 0 -2 0 0 0 1\n"
      "0 1 1 0 0 -2 0 0 0\n"
      "0 0 0 1 1 0 -2 0 0\n"
      "0 0 0 0 0 1 1 -2 0\n"
      "0 0 0 0 0 0 0 1 -1";
  return text;
}

const std::string& a9_prime_text() {
  static const std::string text =
      "0 0 0 0 0 0 0 0 0\n"
      "1 -2 1 0 0 0 0 0 0\n"
      "1 0 -2 0 1 0 0 0 0\n"
      "1 0 0 -2 0 0 1 0 0\n"
      "1 0 0 0 -2 0 0 0 1\n"
      "0 1 0 0 0 -2 0 0 0\n"
      "0 0 0 1 0 0 -2 0 0\n"
      "0 0 0 0 0 1 0 -2 0\n"
      "0 0 0 0 0 0 0 1 -2";
  return text;
}

const std::vector<OrbitExample>& orbit_examples() {
  static const std::vector<OrbitExample> examples = {
      {4, {{"0001", "0111"}, {"0011"}}, {1, -1}},
      {5, {{"00001", "00111", "01011"}, {"00011", "01111", "00101"}}, {1, 1}},
      {6,
       {{"000001", "011111", "001011", "001101"},
        {"000011", "010111"},
        {"000101", "001111"},
        {"000111"}},
       {1, 2, 2, -1}},
  };
  return examples;
}

}  // namespace ng::golden
