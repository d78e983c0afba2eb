#ifndef BOREL_RD_FILE_HPP
#define BOREL_RD_FILE_HPP

// Description-file loading for custom root data. The format is a JSON
// document with fields: lattice_rank (positive integer), simple_roots and
// simple_coroots (equal-length lists of integer vectors), label (string).
// Loading runs the full RootDatum validation suite.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "borel/root_datum.hpp"

namespace borel {

inline RootDatum parse_root_datum_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw invalid_input(std::string("description file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw invalid_input("description file: top level must be an object");

    auto need = [&](const char* field) -> const nlohmann::json& {
        if (!doc.contains(field))
            throw invalid_input(std::string("description file: missing field '") + field + "'");
        return doc.at(field);
    };

    const auto& jrank = need("lattice_rank");
    if (!jrank.is_number_integer() || jrank.get<long long>() < 1 || jrank.get<long long>() > 64)
        throw invalid_input("description file: lattice_rank must be an integer in 1..64");
    const int lattice_rank = jrank.get<int>();

    auto read_vectors = [&](const char* field) {
        const auto& arr = need(field);
        if (!arr.is_array())
            throw invalid_input(std::string("description file: '") + field + "' must be a list of integer vectors");
        std::vector<Weight> out;
        for (const auto& row : arr) {
            if (!row.is_array())
                throw invalid_input(std::string("description file: each entry of '") + field +
                                    "' must be an integer vector");
            Weight v;
            for (const auto& x : row) {
                if (!x.is_number_integer())
                    throw invalid_input(std::string("description file: '") + field +
                                        "' contains a non-integer coordinate");
                const long long c = x.get<long long>();
                if (c > 1000000000LL || c < -1000000000LL)
                    throw invalid_input(std::string("description file: '") + field +
                                        "' coordinate magnitude exceeds 10^9");
                v.push_back(c);
            }
            out.push_back(std::move(v));
        }
        return out;
    };

    const auto& jlabel = need("label");
    if (!jlabel.is_string()) throw invalid_input("description file: label must be a string");

    return RootDatum::from_data(lattice_rank, read_vectors("simple_roots"), read_vectors("simple_coroots"),
                                jlabel.get<std::string>());
}

inline RootDatum load_root_datum(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open description file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_root_datum_json(buf.str());
}

// Serialization of the defining data; round-trips through parse_root_datum_json.
inline nlohmann::ordered_json root_datum_to_json(const RootDatum& rd) {
    nlohmann::ordered_json doc;
    doc["lattice_rank"] = rd.lattice_rank();
    doc["simple_roots"] = rd.simple_roots();
    doc["simple_coroots"] = rd.simple_coroots();
    doc["label"] = rd.label();
    return doc;
}

} // namespace borel

#endif
