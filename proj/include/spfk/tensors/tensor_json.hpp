#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spfk/tensors/tensor.hpp"

namespace spfk {

/// Error in a tensor file: malformed JSON, bad schema, or shape mismatch.
class tensor_format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Tensor file contents:
///   {"order":k,"dim":d,"entries":[{"idx":[i1,...,ik],"num":"..","den":".."},...]}
/// Indices are 1-based and strictly increasing; unlisted entries are zero.
struct TensorFile {
    int order = 0;
    int dim = 0;
    std::vector<std::pair<std::vector<int>, Rational>> entries;  // 0-based indices
};

inline TensorFile parse_tensor_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw tensor_format_error(std::string("malformed JSON: ") + e.what());
    }
    auto fail = [](const std::string& msg) -> void { throw tensor_format_error(msg); };
    if (!doc.is_object()) fail("tensor file must be a JSON object");
    for (const char* key : {"order", "dim", "entries"})
        if (!doc.contains(key)) fail(std::string("missing field '") + key + "'");
    if (!doc["order"].is_number_integer() || !doc["dim"].is_number_integer()) fail("'order' and 'dim' must be integers");
    TensorFile tf;
    tf.order = doc["order"].get<int>();
    tf.dim = doc["dim"].get<int>();
    if (tf.order < 1) fail("'order' must be >= 1");
    if (tf.dim < 0) fail("'dim' must be >= 0");
    if (!doc["entries"].is_array()) fail("'entries' must be an array");
    for (const auto& e : doc["entries"]) {
        if (!e.is_object() || !e.contains("idx") || !e["idx"].is_array()) fail("entry without an 'idx' array");
        std::vector<int> idx;
        for (const auto& i : e["idx"]) {
            if (!i.is_number_integer()) fail("non-integer index");
            idx.push_back(i.get<int>() - 1);
        }
        if (static_cast<int>(idx.size()) != tf.order) {
            fail("entry arity " + std::to_string(idx.size()) + " does not match order " + std::to_string(tf.order));
        }
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] < 0 || idx[i] >= tf.dim) fail("index out of range 1.." + std::to_string(tf.dim));
            if (i > 0 && idx[i - 1] >= idx[i]) fail("indices must be strictly increasing");
        }
        auto field = [&](const char* name, const char* fallback) -> std::string {
            if (!e.contains(name)) return fallback;
            if (e[name].is_string()) return e[name].get<std::string>();
            if (e[name].is_number_integer()) return std::to_string(e[name].get<long long>());
            fail(std::string("field '") + name + "' must be a string or integer");
            return {};
        };
        Rational value;
        try {
            value = Rational(BigInt(field("num", "0"), 10), BigInt(field("den", "1"), 10));
        } catch (const std::invalid_argument&) {
            fail("malformed num/den");
        } catch (const std::domain_error& ex) {
            fail(ex.what());
        }
        tf.entries.emplace_back(std::move(idx), std::move(value));
    }
    return tf;
}

inline TensorFile load_tensor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tensor_format_error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_tensor_json(buf.str());
}

template <Symmetry S>
IndexTensor<Rational, S> to_tensor(const TensorFile& tf) {
    IndexTensor<Rational, S> t(tf.order, tf.dim);
    for (const auto& [idx, v] : tf.entries) t.set(idx, v);
    return t;
}

template <Symmetry S>
nlohmann::ordered_json tensor_to_json(const IndexTensor<Rational, S>& t) {
    nlohmann::ordered_json doc;
    doc["order"] = t.order();
    doc["dim"] = t.dim();
    doc["entries"] = nlohmann::ordered_json::array();
    for (const auto& [idx, v] : t.entries()) {
        nlohmann::ordered_json e;
        std::vector<int> one_based(idx);
        for (int& i : one_based) ++i;
        e["idx"] = one_based;
        e["num"] = v.numerator().get_str();
        e["den"] = v.denominator().get_str();
        doc["entries"].push_back(std::move(e));
    }
    return doc;
}

}  // namespace spfk
