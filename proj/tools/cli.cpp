#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "binframe/enumeration.hpp"
#include "binframe/equivalence.hpp"
#include "binframe/error.hpp"
#include "binframe/frame.hpp"
#include "binframe/grammian.hpp"
#include "binframe/text_format.hpp"

namespace binframe::cli {

namespace {

constexpr int kMaxCliEnumerationDim = 5;
constexpr int kMaxCounterexampleDim = 20;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct Options {
    std::string frame_a;
    std::string frame_b;
    std::string mode = "switching";
    bool drop_zero = false;
    int n = 0;
    int k = 0;
    std::optional<int> k_max;
    bool full = false;
    bool list_frames = false;
    std::string out_path;
    int workers = 1;
    bool no_shortcut = false;
    std::string family;
};

void check_enumeration_dim(int n) {
    if (n < 1 || n > kMaxCliEnumerationDim) {
        throw Error(ErrorKind::OutOfRange, "dimension " + std::to_string(n) + " outside [1, " +
                                               std::to_string(kMaxCliEnumerationDim) + "]");
    }
}

// Writes to --out when given, stdout otherwise.
void emit(const Options& opt, const std::string& text, std::ostream& out) {
    if (opt.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw Error(ErrorKind::OutOfRange, "cannot open '" + opt.out_path + "' for writing");
    }
    file << text;
}

std::string format_permutation(const std::vector<std::size_t>& perm) {
    std::string s;
    for (std::size_t j = 0; j < perm.size(); ++j) {
        if (j != 0) {
            s.push_back(' ');
        }
        s += std::to_string(perm[j] + 1);
    }
    return s;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    const Frame f = parse_frame(opt.frame_a);
    const bool frame = is_frame(f);
    out << "frame: " << yes_no(frame) << "; parseval: " << yes_no(is_parseval(f))
        << "; trivially-redundant: " << yes_no(is_trivially_redundant(f)) << "\n";
    return frame ? kExitOk : kExitNegative;
}

int cmd_gram(const Options& opt, std::ostream& out) {
    const Frame f = parse_frame(opt.frame_a);
    const Grammian g = Grammian::of(f);
    out << format_matrix(g.matrix()) << "key: " << canonical_key(g).to_string() << "\n";
    return kExitOk;
}

int cmd_dual(const Options& opt, std::ostream& out) {
    const Frame f = parse_frame(opt.frame_a);
    const auto dual = compute_dual(f);
    if (!dual) {
        out << "NOT-A-FRAME\n";
        return kExitNegative;
    }
    out << format_frame(Frame(f.dim(), *dual)) << "\n";
    return kExitOk;
}

int cmd_equiv(const Options& opt, std::ostream& out) {
    const Frame f = parse_frame(opt.frame_a);
    const Frame h = parse_frame(opt.frame_b);
    if (opt.mode == "unitary") {
        const auto u = unitary_equivalent(f, h);
        if (!u) {
            out << "NOT-EQUIVALENT\n";
            return kExitNegative;
        }
        out << "U:\n" << format_matrix(*u);
        return kExitOk;
    }
    const auto w = switching_equivalent(f, h);
    if (!w) {
        out << "NOT-EQUIVALENT\n";
        return kExitNegative;
    }
    out << "U:\n" << format_matrix(w->unitary) << "pi: " << format_permutation(w->permutation) << "\n";
    return kExitOk;
}

int cmd_complement(const Options& opt, std::ostream& out) {
    const Frame f = parse_frame(opt.frame_a);
    out << format_frame(complement(f, opt.drop_zero)) << "\n";
    return kExitOk;
}

SearchConfig search_config(const Options& opt) {
    return SearchConfig{std::max(1, opt.workers), !opt.no_shortcut};
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
    check_enumeration_dim(opt.n);
    std::string text;
    if (opt.list_frames) {
        enumerate_parseval(opt.n, opt.k, [&](const Frame& f) { text += format_frame(f) + "\n"; }, opt.workers);
    } else {
        for (const auto& c : classify(opt.n, opt.k, search_config(opt))) {
            text += format_catalog_line(c) + "\n";
        }
    }
    emit(opt, text, out);
    return kExitOk;
}

int cmd_catalog(const Options& opt, std::ostream& out, std::ostream& err) {
    check_enumeration_dim(opt.n);
    if (opt.n == kMaxCliEnumerationDim && !opt.k_max && !opt.full) {
        err << "catalog for n = 5 needs --kmax or --full\n";
        return kExitUsage;
    }
    emit(opt, format_catalog(catalog(opt.n, opt.k_max, search_config(opt))), out);
    return kExitOk;
}

int cmd_counterexample(const Options& opt, std::ostream& out) {
    if (opt.n < 2 || opt.n > kMaxCounterexampleDim) {
        throw Error(ErrorKind::OutOfRange, "dimension " + std::to_string(opt.n) + " outside [2, " +
                                               std::to_string(kMaxCounterexampleDim) + "]");
    }
    const Word end = Word{1} << opt.n;
    if (opt.family == "weight2") {
        const Frame f = weight_two_family(opt.n);
        out << format_frame(f) << "\n";
        // Direct sweep, independent of the closed form in parseval_identity_holds.
        bool identity = true;
        for (Word x = 0; x < end && identity; ++x) {
            int lhs = 0;
            for (const auto& v : f.vectors()) {
                lhs ^= parity(x & v.encoding());
            }
            identity = lhs == parity(x);
        }
        const int r = rank(analysis_operator(f));
        out << "parseval-identity: " << yes_no(identity) << " (all " << end << " vectors)\n"
            << "spans: " << yes_no(r == opt.n) << " (rank " << r << " of " << opt.n << ")\n"
            << "parseval: " << yes_no(is_parseval(f)) << "\n";
        return kExitOk;
    }
    const BinMatrix a = shift_matrix(opt.n);
    out << format_matrix(a);
    bool isometry = true;
    for (Word x = 0; x < end && isometry; ++x) {
        const BinVector v(opt.n, x);
        const BinVector ax = a.apply(v);
        isometry = dot(ax, ax) == dot(v, v);
    }
    out << "preserves-self-dot: " << yes_no(isometry) << " (all " << end << " vectors)\n"
        << "rank: " << rank(a) << " of " << opt.n << "\n"
        << "unitary: " << yes_no(is_unitary(a)) << "\n";
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Frames and Parseval frames over binary vector spaces"};
    app.require_subcommand(1);
    Options opt;

    const char* frame_help = "frame literal 'n; v1,...,vk' of integer encodings";

    auto* verify = app.add_subcommand("verify", "Report frame, Parseval and trivial-redundancy verdicts");
    verify->add_option("frame", opt.frame_a, frame_help)->required();

    auto* gram = app.add_subcommand("gram", "Print the Grammian and its canonical key");
    gram->add_option("frame", opt.frame_a, frame_help)->required();

    auto* dual = app.add_subcommand("dual", "Print the constructed dual family");
    dual->add_option("frame", opt.frame_a, frame_help)->required();

    auto* equiv = app.add_subcommand("equiv", "Decide unitary or switching equivalence of Parseval frames");
    equiv->add_option("a", opt.frame_a, frame_help)->required();
    equiv->add_option("b", opt.frame_b, frame_help)->required();
    equiv->add_option("--mode", opt.mode, "unitary or switching")
        ->check(CLI::IsMember({"unitary", "switching"}))
        ->capture_default_str();

    auto* comp = app.add_subcommand("complement", "Print the set-theoretic complement");
    comp->add_option("frame", opt.frame_a, frame_help)->required();
    comp->add_flag("--drop-zero", opt.drop_zero, "Remove the zero vector from the result");

    auto* enumerate = app.add_subcommand("enumerate", "Switching classes of Parseval k-subsets in Z_2^n");
    enumerate->add_option("n", opt.n, "dimension")->required();
    enumerate->add_option("k", opt.k, "frame size")->required();
    enumerate->add_flag("--frames", opt.list_frames, "List every Parseval frame instead of classes");

    auto* cat = app.add_subcommand("catalog", "Catalog of switching classes for every frame size");
    cat->add_option("n", opt.n, "dimension")->required();
    cat->add_option("--kmax", opt.k_max, "largest frame size");
    cat->add_flag("--full", opt.full, "Allow the complete n = 5 catalog");
    cat->add_flag("--no-complement-shortcut", opt.no_shortcut, "Search large k directly");

    for (auto* sub : {enumerate, cat}) {
        sub->add_option("--out", opt.out_path, "write lines to this file instead of stdout");
        sub->add_option("--workers", opt.workers, "worker threads")->check(CLI::Range(1, 256));
    }
    enumerate->add_flag("--no-complement-shortcut", opt.no_shortcut, "accepted for symmetry with catalog");

    auto* counter = app.add_subcommand("counterexample", "Objects that preserve (x,x) without being unitary/frames");
    counter->add_option("family", opt.family, "weight2 or shift")
        ->required()
        ->check(CLI::IsMember({"weight2", "shift"}));
    counter->add_option("n", opt.n, "dimension")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(opt, out);
        if (gram->parsed()) return cmd_gram(opt, out);
        if (dual->parsed()) return cmd_dual(opt, out);
        if (equiv->parsed()) return cmd_equiv(opt, out);
        if (comp->parsed()) return cmd_complement(opt, out);
        if (enumerate->parsed()) return cmd_enumerate(opt, out);
        if (cat->parsed()) return cmd_catalog(opt, out, err);
        if (counter->parsed()) return cmd_counterexample(opt, out);
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace binframe::cli
