// Copyright 2026 The zassucc Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "zassucc/params_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "zassucc/numeric_format.hpp"

namespace zassucc {

namespace {

using nlohmann::json;

json parse_object(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw ParseError("expected a JSON object at top level");
    }
    return j;
}

std::vector<int> parse_key(const std::string &key, std::size_t arity) {
    std::vector<int> out;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(part, &used);
        } catch (const std::exception &) {
            throw ParseError("bad index key \"" + key + "\"");
        }
        if (used != part.size() || v < 1) {
            throw ParseError("bad index key \"" + key + "\" (need positive integers)");
        }
        out.push_back(v);
    }
    if (out.size() != arity) {
        throw ParseError("key \"" + key + "\" needs " + std::to_string(arity) + " indices");
    }
    return out;
}

double number(const json &v, const std::string &key) {
    if (!v.is_number()) {
        throw ParseError("value for \"" + key + "\" must be a number");
    }
    return v.get<double>();
}

const json *member(const json &j, const char *name) {
    const auto it = j.find(name);
    if (it == j.end()) {
        return nullptr;
    }
    if (!it->is_object()) {
        throw ParseError(std::string("\"") + name + "\" must be an object");
    }
    return &*it;
}

} // namespace

ClusterParams parse_params_json(const std::string &text) {
    const json j = parse_object(text);
    for (const auto &[k, v] : j.items()) {
        if (k != "mu_pair" && k != "mu_single" && k != "blocks") {
            throw ParseError("unknown field \"" + k + "\"");
        }
    }
    std::vector<std::tuple<int, int, double>> pairs;
    std::vector<std::pair<int, double>> singles;
    int max_index = 0;
    if (const json *mp = member(j, "mu_pair")) {
        for (const auto &[key, v] : mp->items()) {
            const auto idx = parse_key(key, 2);
            if (idx[0] >= idx[1]) {
                throw ParseError("pair key \"" + key + "\" needs i < j");
            }
            pairs.emplace_back(idx[0], idx[1], number(v, key));
            max_index = std::max(max_index, idx[1]);
        }
    }
    if (const json *ms = member(j, "mu_single")) {
        for (const auto &[key, v] : ms->items()) {
            const auto idx = parse_key(key, 1);
            singles.emplace_back(idx[0], number(v, key));
            max_index = std::max(max_index, idx[0]);
        }
    }
    int n = max_index;
    if (const auto it = j.find("blocks"); it != j.end()) {
        if (!it->is_number_integer() || it->get<int>() < 1) {
            throw ParseError("\"blocks\" must be a positive integer");
        }
        n = it->get<int>();
        if (n < max_index) {
            throw ParseError("\"blocks\" is smaller than the largest index used");
        }
    }
    if (n < 1) {
        throw ParseError("no blocks: give \"blocks\" or at least one amplitude");
    }
    ClusterParams p(n);
    for (const auto &[a, b, v] : pairs) {
        p.set_pair(a - 1, b - 1, v);
    }
    for (const auto &[k, v] : singles) {
        p.set_single(k - 1, v);
    }
    return p;
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open \"" + path + "\"");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ClusterParams load_params_file(const std::string &path) { return parse_params_json(read_text_file(path)); }

std::string params_to_json(const ClusterParams &params) {
    std::ostringstream os;
    const int n = params.n_blocks();
    os << "{\"blocks\":" << n << ",\"mu_pair\":{";
    bool first = true;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (params.pair(i, j) == 0.0) {
                continue;
            }
            os << (first ? "" : ",") << '"' << i + 1 << ',' << j + 1
               << "\":" << format_double(params.pair(i, j));
            first = false;
        }
    }
    os << "},\"mu_single\":{";
    first = true;
    for (int k = 0; k < n; ++k) {
        os << (first ? "" : ",") << '"' << k + 1 << "\":" << format_double(params.single(k));
        first = false;
    }
    os << "}}";
    return os.str();
}

T1Input parse_t1_json(const std::string &text) {
    const json j = parse_object(text);
    T1Input t;
    for (const char *f : {"n_orb", "n_occ"}) {
        const auto it = j.find(f);
        if (it == j.end() || !it->is_number_integer() || it->get<int>() < 1) {
            throw ParseError(std::string("\"") + f + "\" must be a positive integer");
        }
    }
    t.n_orb = j.at("n_orb").get<int>();
    t.n_occ = j.at("n_occ").get<int>();
    if (const json *m = member(j, "mu")) {
        for (const auto &[key, v] : m->items()) {
            const auto idx = parse_key(key, 2);
            t.mu[{idx[0], idx[1]}] = number(v, key);
        }
    }
    return t;
}

T2Input parse_t2_json(const std::string &text) {
    const json j = parse_object(text);
    T2Input t;
    if (const json *m = member(j, "mu")) {
        for (const auto &[key, v] : m->items()) {
            const auto idx = parse_key(key, 4);
            t.mu[{idx[0], idx[1], idx[2], idx[3]}] = number(v, key);
        }
    }
    return t;
}

} // namespace zassucc
