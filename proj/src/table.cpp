#include <altmap/table.hpp>

#include <json.hpp>

#include <sstream>

namespace altmap {

void CoefficientTable::add_row(std::vector<int> index, const Rational& value)
{
    rows.push_back({std::move(index), num_string(value), den_string(value)});
}

CoefficientTable CoefficientTable::from_series(std::string command,
                                               std::string formula, const Series& s)
{
    CoefficientTable t;
    t.command = std::move(command);
    t.formula = std::move(formula);
    t.index_names = s.vars();
    for (const auto& [e, c] : s.terms()) t.add_row(e, c);
    return t;
}

std::string CoefficientTable::to_json() const
{
    nlohmann::ordered_json j;
    j["meta"]["command"] = command;
    j["meta"]["formula"] = formula;
    for (const auto& [k, v] : params) j["meta"]["params"][k] = v;
    j["meta"]["index_names"] = index_names;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["index"] = r.index;
        row["num"] = r.num;
        row["den"] = r.den;
        j["rows"].push_back(row);
    }
    return j.dump(2) + "\n";
}

std::string CoefficientTable::to_csv() const
{
    std::ostringstream os;
    os << "# command=" << command << " formula=" << formula;
    for (const auto& [k, v] : params) os << " " << k << "=" << v;
    os << "\n";
    for (const auto& n : index_names) os << n << ",";
    os << "num,den\n";
    for (const auto& r : rows) {
        for (int i : r.index) os << i << ",";
        os << r.num << "," << r.den << "\n";
    }
    return os.str();
}

} // namespace altmap
