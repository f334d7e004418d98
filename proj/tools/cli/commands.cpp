// Copyright 2026 The usynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <optional>
#include <sstream>

#include "usynth/bounds.hpp"
#include "usynth/error.hpp"
#include "usynth/json_io.hpp"
#include "usynth/synth.hpp"

namespace usynth::cli {

namespace {

using nlohmann::json;

constexpr double kInputTol = 1e-8;

[[noreturn]] void parse_fail(const std::string &msg) { throw Error(ErrorKind::ParseError, msg); }

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) parse_fail("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_document(const std::string &text, const std::string &path) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        parse_fail(path + ": " + e.what());
    }
}

struct Loaded {
    ChoiOperator choi;
    std::optional<Unitary> u;
};

std::size_t dim_field(const json &j, const char *key) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) parse_fail(std::string("choi file needs integer '") + key + "'");
    return j[key].get<std::size_t>();
}

Loaded load(const std::string &spec) {
    if (!std::filesystem::exists(spec)) {
        const Unitary u = named_unitary(spec);
        return {choi(u), u};
    }
    const json j = parse_document(read_file(spec), spec);
    if (j.is_object() && j.contains("choi")) {
        const ComplexMatrix m = matrix_from_json(j["choi"].dump());
        const std::size_t d1 = dim_field(j, "d1"), d2 = dim_field(j, "d2");
        if (m.rows() != d1 * d2 || m.cols() != d1 * d2)
            throw Error(ErrorKind::DimensionMismatch, spec + ": choi matrix is not (d1 d2) x (d1 d2)");
        return {{HermitianMatrix(m, kInputTol), d1, d2}, std::nullopt};
    }
    const json &mj = j.is_object() && j.contains("unitary") ? j["unitary"] : j;
    const Unitary u(matrix_from_json(mj.dump()), kInputTol);
    return {choi(u), u};
}

std::vector<std::string> json_files(const std::string &dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) parse_fail("'" + dir + "' is not a directory");
    std::vector<std::string> out;
    for (const auto &e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path().string());
    std::sort(out.begin(), out.end());
    if (out.empty()) throw Error(ErrorKind::EmptyCandidates, "no .json files in '" + dir + "'");
    return out;
}

json rounded(const std::vector<double> &v) {
    json a = json::array();
    for (double x : v) a.push_back(round_significant(x));
    return a;
}

// Writes to `path`, or to out when path is empty.
void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
    f << text;
}

MixLowering lowering_from(const std::string &s) {
    if (s == "dual") return MixLowering::DualForm;
    if (s == "primal") return MixLowering::PrimalForm;
    throw Error(ErrorKind::InvalidArgument, "lowering must be dual or primal");
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SdpFailure:
            return kExitSdp;
        case ErrorKind::CoveringUnreachable:
            return kExitCovering;
        default:
            return kExitUsage;
    }
}

std::vector<double> parse_angle_list(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_angle(item));
    if (out.empty()) parse_fail("empty angle list");
    return out;
}

// a:b:step
std::vector<double> parse_grid(const std::string &text) {
    std::stringstream ss(text);
    std::string a, b, s;
    if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, s) || s.find(':') != s.npos)
        parse_fail("grid must look like a:b:step");
    return linear_grid(parse_angle(a), parse_angle(b), parse_angle(s));
}

}  // namespace

double parse_angle(std::string_view text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    const std::string orig(text);
    if (t.empty()) parse_fail("empty number");
    auto number = [&](const std::string &s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception &) {
            parse_fail("bad number '" + orig + "'");
        }
        if (used != s.size()) parse_fail("bad number '" + orig + "'");
        if (!std::isfinite(v)) throw Error(ErrorKind::NonFinite, "non-finite number '" + orig + "'");
        return v;
    };
    const auto at = t.find("pi");
    if (at == std::string::npos) return number(t);
    std::string head = t.substr(0, at);
    const std::string tail = t.substr(at + 2);
    double scale = 1.0;
    if (!head.empty() && head.back() == '*') head.pop_back();
    if (head == "-") {
        scale = -1.0;
    } else if (!head.empty() && head != "+") {
        scale = number(head);
    }
    double div = 1.0;
    if (!tail.empty()) {
        if (tail[0] != '/') parse_fail("bad angle '" + orig + "'");
        div = number(tail.substr(1));
        if (div == 0.0) parse_fail("division by zero in '" + orig + "'");
    }
    return scale * std::numbers::pi / div;
}

Unitary named_unitary(std::string_view name) {
    const double s = 1.0 / std::sqrt(2.0);
    const Complex i(0.0, 1.0);
    const std::string n(name);
    if (n == "I") return Unitary::identity(2);
    if (n == "X") return Unitary(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}});
    if (n == "Y") return Unitary(ComplexMatrix{{0.0, -i}, {i, 0.0}});
    if (n == "Z") return Unitary(ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}});
    if (n == "H") return Unitary(ComplexMatrix{{s, s}, {s, -s}});
    if (n == "S") return Unitary(ComplexMatrix{{1.0, 0.0}, {0.0, i}});
    if (n == "Sdg") return Unitary(ComplexMatrix{{1.0, 0.0}, {0.0, -i}});
    if (n == "T") return Unitary(ComplexMatrix{{1.0, 0.0}, {0.0, std::polar(1.0, std::numbers::pi / 4)}});
    if (n == "Tdg") return Unitary(ComplexMatrix{{1.0, 0.0}, {0.0, std::polar(1.0, -std::numbers::pi / 4)}});
    if (n.size() > 4 && n.rfind("Rz(", 0) == 0 && n.back() == ')') {
        const double th = parse_angle(std::string_view(n).substr(3, n.size() - 4));
        return Unitary(ComplexMatrix{{std::polar(1.0, -th / 2), 0.0}, {0.0, std::polar(1.0, th / 2)}});
    }
    parse_fail("'" + n + "' is neither a file nor a named unitary (I X Y Z H S Sdg T Tdg Rz(angle))");
}

ChoiOperator load_channel(const std::string &spec) { return load(spec).choi; }

Unitary load_unitary(const std::string &spec) {
    auto l = load(spec);
    if (!l.u) parse_fail(spec + ": expected a unitary, got a Choi operator");
    return *l.u;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Optimal probabilistic mixing of unitary channels", "usynth"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "usynth 0.1.0");

    // diamond
    std::string da, db;
    SdpOptions sdp_opts;
    auto *diamond = app.add_subcommand("diamond", "Half-diamond distance between two channels");
    diamond->add_option("a", da, "Channel file or named unitary")->required();
    diamond->add_option("b", db, "Channel file or named unitary")->required();
    diamond->add_option("--max-iter", sdp_opts.max_iter, "Interior-point iteration cap")->capture_default_str();

    // mixopt
    std::string mt, mdir, mout, mlow = "dual";
    bool mparanoid = false;
    auto *mixopt = app.add_subcommand("mixopt", "Optimal mixing distribution over a directory of candidates");
    mixopt->add_option("target", mt, "Target channel file or named unitary")->required();
    mixopt->add_option("candidates", mdir, "Directory of candidate .json files (read in name order)")->required();
    mixopt->add_option("--out", mout, "Write the JSON here instead of stdout");
    mixopt->add_option("--lowering", mlow, "dual or primal")->check(CLI::IsMember({"dual", "primal"}));
    mixopt->add_flag("--paranoid", mparanoid, "Solve both lowerings and report the second value");
    mixopt->add_option("--max-iter", sdp_opts.max_iter, "Interior-point iteration cap")->capture_default_str();

    // synth1q
    std::string st, sgs = "clifford_t", sout;
    double seps = 0.0, sdelta = 1e-6, sc = 0.5, scp = 0.5;
    std::size_t slen = 12, ssamples = 0;
    std::uint64_t sseed = 0;
    auto *synth = app.add_subcommand("synth1q", "Probabilistic single-qubit synthesis");
    synth->add_option("--target", st, "Unitary file or named target")->required();
    synth->add_option("--eps", seps, "Target accuracy, in (0, 1/2)")->required();
    synth->add_option("--delta", sdelta, "SDP accuracy slack")->capture_default_str();
    synth->add_option("--gateset", sgs, "clifford_t or a gate-set JSON file")->capture_default_str();
    synth->add_option("--max-length", slen, "Longest gate sequence in the pool")->capture_default_str();
    synth->add_option("--seed", sseed, "Sampling seed")->capture_default_str();
    synth->add_option("--samples", ssamples, "Number of sequences to sample")->capture_default_str();
    synth->add_option("--c", sc, "Covering mesh as a fraction of eps")->capture_default_str();
    synth->add_option("--c-prime", scp, "Deterministic accuracy as a fraction of eps")->capture_default_str();
    synth->add_option("--out", sout, "Write the JSON here instead of stdout");

    // bounds
    std::size_t bd = 2;
    std::string bgrid = "0:1:0.05", bout;
    auto *bounds = app.add_subcommand("bounds", "Worst-case bound curves as CSV");
    bounds->add_option("--d", bd, "Dimension")->capture_default_str();
    bounds->add_option("--eps-grid", bgrid, "a:b:step")->capture_default_str();
    bounds->add_option("--out", bout, "Write the CSV here instead of stdout");

    // sharpness
    std::size_t hd = 2;
    double heps = 0.0, hmesh = 0.1;
    std::string hfam, hout;
    auto *sharp = app.add_subcommand("sharpness", "Optimal mixing over a family that attains a bound");
    sharp->add_option("--d", hd, "Dimension (2, 3 or 4)")->capture_default_str();
    sharp->add_option("--eps", heps, "Distance eps")->required();
    sharp->add_option("--family", hfam, "lower or upper")->required()->check(CLI::IsMember({"lower", "upper"}));
    sharp->add_option("--mesh", hmesh, "Grid spacing of the family")->capture_default_str();
    sharp->add_option("--out", hout, "Write the JSON here instead of stdout");

    // axial
    std::string atheta, athetas;
    auto *axial = app.add_subcommand("axial", "Mixing of rotations about one axis");
    axial->add_option("--target-theta", atheta, "Target angle, e.g. pi/2")->required();
    axial->add_option("--thetas", athetas, "Comma-separated candidate angles")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*diamond) {
            const auto r = diamond_distance(load_channel(da), load_channel(db), sdp_opts);
            json j{{"value", round_significant(r.value)}, {"gap", round_significant(r.gap)}};
            out << j.dump() << '\n';
        } else if (*mixopt) {
            const Loaded target = load(mt);
            const auto files = json_files(mdir);
            std::vector<Loaded> cands;
            for (const auto &f : files) cands.push_back(load(f));
            std::vector<ChoiOperator> chans;
            for (const auto &c : cands) chans.push_back(c.choi);
            MixOptions mo;
            mo.sdp = sdp_opts;
            mo.lowering = lowering_from(mlow);
            mo.paranoid = mparanoid;
            const auto r = optimal_mix(target.choi, chans, mo);
            double best = 1.0;
            for (const auto &c : cands) {
                const double d = target.u && c.u ? unitary_distance(*target.u, *c.u)
                                                 : diamond_distance(target.choi, c.choi).value;
                best = std::min(best, d);
            }
            json names = json::array();
            for (const auto &f : files) names.push_back(std::filesystem::path(f).filename().string());
            json j{{"candidates", names},
                   {"p", rounded(r.p.weights)},
                   {"value", round_significant(r.value)},
                   {"gap", round_significant(r.gap)},
                   {"best_single", round_significant(best)}};
            if (r.cross_checked) j["cross_check_value"] = round_significant(r.cross_check_value);
            emit(j.dump() + "\n", mout, out);
        } else if (*synth) {
            const Unitary target = load_unitary(st);
            if (target.dim() != 2) throw Error(ErrorKind::DimensionMismatch, "synth1q needs a single-qubit target");
            const GateSet gs = sgs == "clifford_t" ? GateSet::clifford_t() : gate_set_from_json(read_file(sgs));
            const auto pool = enumerate_sequences(gs, slen);
            ProbSynthParams params;
            params.c = sc;
            params.c_prime = scp;
            params.samples = ssamples;
            const auto r = prob_synth(target, seps, sdelta, pool, sseed, params);
            emit(to_json(r) + "\n", sout, out);
        } else if (*bounds) {
            emit(curve_csv(curve_sweep(bd, parse_grid(bgrid))), bout, out);
        } else if (*sharp) {
            const auto r = sharpness(hfam == "lower" ? Family::Lower : Family::Upper, heps, hd, hmesh);
            json j{{"family", hfam},
                   {"d", hd},
                   {"eps", round_significant(heps)},
                   {"mesh", round_significant(hmesh)},
                   {"value", round_significant(r.value)},
                   {"bound", round_significant(r.bound)},
                   {"slack", round_significant(r.slack)},
                   {"gap", round_significant(r.gap)},
                   {"family_size", r.family_size},
                   {"candidates", r.candidates}};
            emit(j.dump() + "\n", hout, out);
        } else if (*axial) {
            const auto r = axial_optimal(parse_angle(atheta), parse_angle_list(athetas));
            json j{{"p", rounded(r.p.weights)}, {"value", round_significant(r.value)}};
            out << j.dump() << '\n';
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace usynth::cli
