#ifndef ALTMAP_TABLE_HPP
#define ALTMAP_TABLE_HPP

#include <altmap/series.hpp>

#include <string>
#include <utility>
#include <vector>

namespace altmap {

struct TableRow {
    std::vector<int> index;
    std::string num;
    std::string den;
};

// Exact coefficient table with provenance metadata. Rationals are serialized
// as decimal integer strings, never floats; output is deterministic
// (byte-identical for identical inputs).
struct CoefficientTable {
    std::string command;
    std::string formula; // which identity produced the numbers
    std::vector<std::pair<std::string, std::string>> params; // ordered
    std::vector<std::string> index_names;
    std::vector<TableRow> rows;

    void add_row(std::vector<int> index, const Rational& value);

    // All terms of s, index = exponent vector in s's variable order.
    static CoefficientTable from_series(std::string command, std::string formula,
                                        const Series& s);

    std::string to_json() const;
    std::string to_csv() const;
};

} // namespace altmap

#endif
