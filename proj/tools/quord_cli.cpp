// quord: command-line front end for the quord library.
//
// Exit codes: 0 success or predicate true, 1 predicate false, 2 invalid
// input, 3 size cap exceeded, 4 internal error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quord/quord.hpp"

namespace {

using namespace quord;

constexpr int exit_false = 1;
constexpr int exit_input = 2;
constexpr int exit_resource = 3;
constexpr int exit_internal = 4;

SearchLimits limits_from_environment() {
    SearchLimits limits;
    if (const char* raw = std::getenv("QUORD_MAX_N")) {
        std::string text(raw);
        std::size_t used = 0;
        std::size_t cap = 0;
        try {
            cap = std::stoul(text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (text.empty() || used != text.size()) {
            throw InputError("QUORD_MAX_N must be a non-negative integer, got '" + text + "'");
        }
        limits.halfspace_max_n = cap;
        limits.order_max_n = cap;
    }
    return limits;
}

Quasiorder require_quasiorder(const LabeledRelation& r, const std::string& what) {
    try {
        return Quasiorder(r.relation);
    } catch (const ValidationError& e) {
        throw InputError(what + " is not a quasiorder: " + e.what());
    }
}

HalfSpace require_halfspace(const LabeledRelation& r, const std::string& what) {
    Quasiorder q = require_quasiorder(r, what);
    auto check = is_halfspace(q);
    if (!check.holds) {
        const Triple& t = *check.witness;
        throw InputError(what + " is not a half-space: witness (x,y,z) = (" + r.labels[t.x] + "," + r.labels[t.y] +
                         "," + r.labels[t.z] + ")");
    }
    return HalfSpace(q);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// --- subcommands ------------------------------------------------------------

int cmd_classify(const std::string& file) {
    LabeledRelation r = read_relation_file(file);
    const auto& labels = r.labels;
    Properties p = classify(r.relation);
    std::cout << "elements: " << r.relation.size() << "\n";
    std::cout << "pairs: " << r.relation.pair_count() << "\n";
    std::cout << "reflexive: " << yes_no(p.reflexive);
    if (auto x = find_irreflexive(r.relation)) {
        std::cout << "  # missing " << format_named_pair({*x, *x}, labels);
    }
    std::cout << "\ntransitive: " << yes_no(p.transitive);
    if (auto t = find_intransitive(r.relation)) {
        std::cout << "  # " << format_named_pair({(*t)[0], (*t)[1]}, labels) << " and "
                  << format_named_pair({(*t)[1], (*t)[2]}, labels) << " without "
                  << format_named_pair({(*t)[0], (*t)[2]}, labels);
    }
    std::cout << "\nantisymmetric: " << yes_no(p.antisymmetric);
    if (auto q = find_antisymmetry_violation(r.relation)) {
        std::cout << "  # " << format_named_pair(*q, labels) << " and its inverse";
    }
    std::cout << "\nsymmetric: " << yes_no(p.symmetric);
    std::cout << "\ntotal: " << yes_no(p.total);
    if (auto q = find_incomparable(r.relation)) {
        std::cout << "  # " << format_named_pair(*q, labels) << " incomparable";
    }
    bool quasi = p.reflexive && p.transitive;
    std::cout << "\nquasiorder: " << yes_no(quasi) << "\n";
    std::cout << "partial-order: " << yes_no(quasi && p.antisymmetric) << "\n";
    std::cout << "linear-order: " << yes_no(quasi && p.antisymmetric && p.total) << "\n";
    std::cout << "equivalence: " << yes_no(quasi && p.symmetric) << "\n";
    if (quasi) {
        std::cout << "halfspace: " << yes_no(is_halfspace(Quasiorder(r.relation)).holds) << "\n";
    }
    return 0;
}

int cmd_check_halfspace(const std::string& file) {
    LabeledRelation r = read_relation_file(file);
    auto check = is_halfspace(require_quasiorder(r, file));
    std::cout << "halfspace: " << yes_no(check.holds) << "\n";
    if (!check.holds) {
        const Triple& t = *check.witness;
        const auto& l = r.labels;
        std::cout << "witness: (x,y,z) = (" << l[t.x] << "," << l[t.y] << "," << l[t.z] << ") ids (" << t.x << ","
                  << t.y << "," << t.z << ")\n";
        std::cout << "# x,y incomparable, (x,z) present, (y,z) missing\n";
        return exit_false;
    }
    return 0;
}

int cmd_decompose(const std::string& file) {
    LabeledRelation r = read_relation_file(file);
    BoxDecomposition d = box_decomposition(require_halfspace(r, file));
    std::cout << format_boxes(d, r.labels) << "\n";
    for (std::size_t i = 0; i < d.boxes().size(); ++i) {
        const Box& b = d.boxes()[i];
        std::cout << "box " << i << ": " << format_set(b.members, r.labels) << " ids "
                  << format_set(b.members, numeric_labels(r.labels.size())) << " "
                  << (b.kind == BoxKind::full ? "full" : "empty") << "\n";
    }
    return 0;
}

int cmd_complement(const std::string& file) {
    LabeledRelation r = read_relation_file(file);
    HalfSpace beta = complement_halfspace(require_halfspace(r, file));
    std::cout << format_relation({r.labels, beta.relation()});
    return 0;
}

int cmd_extend(const std::string& file, const std::optional<std::string>& seed) {
    LabeledRelation r = read_relation_file(file);
    Quasiorder q = require_quasiorder(r, file);
    if (auto p = find_antisymmetry_violation(q.relation())) {
        throw InputError(file + " is not a partial order: " + format_named_pair(*p, r.labels) +
                         " and its inverse present");
    }
    LinearOrder s = seed ? parse_permutation(*seed, r.labels) : LinearOrder::natural(r.labels.size());
    LinearOrder l = szpilrajn_extension(PartialOrder(q), s);
    std::cout << "# " << format_chain(l, r.labels) << "\n" << format_relation({r.labels, l.relation()});
    return 0;
}

int cmd_tighten(const std::string& gamma_file, const std::string& alpha_file, const std::optional<std::string>& perm) {
    LabeledRelation g = read_relation_file(gamma_file);
    LabeledRelation a = read_relation_file(alpha_file);
    if (g.labels != a.labels) {
        throw InputError("gamma and alpha must list the same elements in the same order");
    }
    Quasiorder gamma = require_quasiorder(g, gamma_file);
    HalfSpace alpha = require_halfspace(a, alpha_file);
    QuotientMap quotient = induced_order(gamma);
    LinearOrder r = perm ? parse_class_permutation(*perm, g.labels, quotient) : szpilrajn_extension(quotient.induced());
    HalfSpace tau = tighten_halfspace(gamma, alpha, r);
    std::cout << "# R on classes: " << format_chain(r, class_labels(quotient, g.labels)) << "\n";
    std::cout << format_relation({g.labels, tau.relation()});
    return 0;
}

int cmd_linearize(const std::string& alpha_file, const std::string& lambda_file, bool both) {
    LabeledRelation a = read_relation_file(alpha_file);
    LabeledRelation l = read_relation_file(lambda_file);
    if (a.labels != l.labels) {
        throw InputError("alpha and lambda must list the same elements in the same order");
    }
    HalfSpace alpha = require_halfspace(a, alpha_file);
    LinearOrder lambda = [&] {
        try {
            return LinearOrder(l.relation);
        } catch (const ValidationError& e) {
            throw InputError(lambda_file + " is not a linear order: " + e.what());
        }
    }();
    LinearOrder up = linearize_halfspace(alpha, lambda);
    std::cout << "# " << format_chain(up, a.labels) << "\n" << format_relation({a.labels, up.relation()});
    if (both) {
        LinearOrder down = linearize_halfspace(alpha, inverse(lambda));
        std::cout << "---\n# " << format_chain(down, a.labels) << "\n" << format_relation({a.labels, down.relation()});
    }
    return 0;
}

void print_dimension_report(const LabeledRelation& r, const DimensionReport& d) {
    auto classes = class_labels(d.quotient, r.labels);
    std::cout << "hs-dim: " << d.hs.value << "\n";
    std::cout << "quotient-dim: " << d.quotient_order.value << "\n";
    if (d.order) {
        std::cout << "dim: " << d.order->value << "\n";
    }
    std::cout << "hs-witness:\n";
    for (const auto& h : d.hs.witness.parts()) {
        std::cout << "  " << format_boxes(box_decomposition(h), r.labels) << "\n";
    }
    std::cout << "quotient-classes: ";
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::cout << (i ? " " : "") << classes[i];
    }
    std::cout << "\nquotient-witness:\n";
    for (const auto& l : d.quotient_order.witness) {
        std::cout << "  " << format_chain(l, classes) << "\n";
    }
    if (d.order) {
        std::cout << "dim-witness:\n";
        for (const auto& l : d.order->witness) {
            std::cout << "  " << format_chain(l, r.labels) << "\n";
        }
    }
}

int cmd_dimension(const std::string& file, bool hs_first) {
    LabeledRelation r = read_relation_file(file);
    Quasiorder q = require_quasiorder(r, file);
    DimensionReport d = dimension_report(q, limits_from_environment());
    std::size_t headline = hs_first ? d.hs.value : (d.order ? d.order->value : d.quotient_order.value);
    std::cout << headline << "\n";
    print_dimension_report(r, d);
    return 0;
}

int cmd_transform(const std::string& gamma_file, const std::vector<std::string>& realizer_files,
                  const std::optional<std::string>& mu_text, std::size_t i_star, bool alt) {
    LabeledRelation g = read_relation_file(gamma_file);
    Quasiorder gamma = require_quasiorder(g, gamma_file);
    std::vector<HalfSpace> parts;
    for (const auto& f : realizer_files) {
        LabeledRelation a = read_relation_file(f);
        if (a.labels != g.labels) {
            throw InputError(f + " must list the same elements in the same order as " + gamma_file);
        }
        parts.push_back(require_halfspace(a, f));
    }
    Realizer given = [&] {
        try {
            return Realizer(gamma, parts);
        } catch (const ValidationError& e) {
            throw InputError(std::string("the half-spaces do not realize gamma: ") + e.what());
        }
    }();
    auto [realizer, padded] = pad_realizer(given);
    QuotientMap quotient = induced_order(gamma);
    LinearOrder mu =
        mu_text ? parse_class_permutation(*mu_text, g.labels, quotient) : LinearOrder::natural(quotient.class_count());
    RealizerTransform t = alt ? realizer_to_linear_extensions_alt(realizer, mu, i_star)
                              : realizer_to_linear_extensions(realizer, mu, i_star);
    auto classes = class_labels(quotient, g.labels);
    std::cout << "construction: " << (alt ? "reversal-set" : "szpilrajn") << "\n";
    if (padded) {
        std::cout << "# padded: a single half-space was given; the full relation was appended as part 1\n";
    }
    std::cout << "classes:";
    for (const auto& c : classes) {
        std::cout << " " << c;
    }
    std::cout << "\nmu: " << format_chain(mu, classes) << "\n";
    std::cout << "i*: " << i_star << "\n";
    std::cout << "rho: " << to_string(t.rho.relation()) << "\n";
    std::cout << "theta: " << to_string(t.theta.relation()) << "\n";
    if (t.lambda) {
        std::cout << "lambda: " << format_chain(*t.lambda, classes) << "\n";
        std::cout << "lambda*: " << format_chain(*t.lambda_star, classes) << "\n";
    }
    for (std::size_t i = 0; i < t.orders.size(); ++i) {
        std::cout << "R" << i << ": " << format_chain(t.orders[i], classes) << "\n";
    }
    return 0;
}

int cmd_product(const std::vector<std::string>& files, bool structural_only) {
    std::vector<LabeledRelation> inputs;
    std::vector<Quasiorder> factors;
    for (const auto& f : files) {
        inputs.push_back(read_relation_file(f));
        factors.push_back(require_quasiorder(inputs.back(), f));
    }
    ProductVerdict v = product_halfspace_predicate(factors, true);
    if (!structural_only) {
        Product p = direct_product(factors);
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < p.encoding.size(); ++i) {
            auto tuple = p.encoding.tuple(i);
            std::string name = "(";
            for (std::size_t k = 0; k < tuple.size(); ++k) {
                name += (k ? "," : "") + inputs[k].labels[tuple[k]];
            }
            labels.push_back(name + ")");
        }
        std::cout << format_relation({labels, p.order.relation()});
        bool direct = is_halfspace(p.order).holds;
        std::cout << "# halfspace (direct): " << yes_no(direct) << "\n";
        ensure(direct == v.is_halfspace, "structural verdict disagrees with the product");
    }
    std::cout << "# halfspace (structural): " << yes_no(v.is_halfspace) << "  # " << v.explanation << "\n";
    return v.is_halfspace ? 0 : exit_false;
}

int cmd_enumerate(const std::string& kind, std::size_t n) {
    std::size_t count = 0;
    auto emit = [&](const Relation& r) {
        if (count > 0) {
            std::cout << "---\n";
        }
        std::cout << format_relation({numeric_labels(n), r});
        ++count;
    };
    if (kind == "quasiorders") {
        for (const auto& q : enumerate_quasiorders(n)) {
            emit(q.relation());
        }
    } else if (kind == "halfspaces") {
        for (const auto& h : enumerate_halfspaces(n, limits_from_environment())) {
            emit(h.relation());
        }
    } else {
        throw InputError("enumerate takes `quasiorders` or `halfspaces`, got '" + kind + "'");
    }
    std::cout << "# count: " << count << "\n";
    return 0;
}

int cmd_oracle(const std::string& id, bool list) {
    if (list) {
        for (const auto& s : suite_ids()) {
            std::cout << s << "\n";
        }
        return 0;
    }
    SuiteReport r = theorem_replay(id);
    std::cout << r.id << ": " << r.instances << " instances, " << r.failures << " failures\n";
    std::cout << "seed: " << r.seed << "\n";
    for (const auto& m : r.messages) {
        std::cout << "failure: " << m << "\n";
    }
    // Timing varies between runs; keep it off stdout.
    std::cerr << "wall time: " << static_cast<long long>(r.wall_ms) << " ms\n";
    return r.failures == 0 ? 0 : exit_false;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite quasiorders and half-spaces"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    std::string file;
    std::string file2;
    std::optional<std::string> perm;
    std::vector<std::string> files;
    bool flag = false;
    std::size_t number = 0;
    std::string word;

    auto* classify_cmd = app.add_subcommand("classify", "Report the order properties of a relation");
    classify_cmd->add_option("file", file, "Relation file")->required();

    auto* check_cmd = app.add_subcommand("check", "Check a predicate");
    check_cmd->require_subcommand(1);
    auto* check_hs = check_cmd->add_subcommand("halfspace", "Is the quasiorder a half-space?");
    check_hs->add_option("file", file, "Relation file")->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "Box decomposition of a half-space");
    decompose_cmd->add_option("file", file, "Relation file")->required();

    auto* complement_cmd = app.add_subcommand("complement", "Complementary half-space");
    complement_cmd->add_option("file", file, "Relation file")->required();

    auto* extend_cmd = app.add_subcommand("extend", "Linear extension of a partial order");
    extend_cmd->add_option("file", file, "Relation file")->required();
    extend_cmd->add_option("--seed", perm, "Comma-separated element names orienting incomparable pairs");

    auto* tighten_cmd = app.add_subcommand("tighten", "Shrink a half-space to the symmetric part of gamma");
    tighten_cmd->add_option("--gamma", file, "Quasiorder file")->required();
    tighten_cmd->add_option("--alpha", file2, "Half-space file containing gamma")->required();
    tighten_cmd->add_option("--r", perm, "Linear extension of the induced order, as element names");

    auto* linearize_cmd = app.add_subcommand("linearize", "Extend an antisymmetric half-space by a linear order");
    linearize_cmd->add_option("--alpha", file, "Half-space file")->required();
    linearize_cmd->add_option("--lambda", file2, "Linear order file")->required();
    linearize_cmd->add_flag("--both", flag, "Also print the extension by the inverse order");

    auto* dim_cmd = app.add_subcommand("dim", "Order dimension (of the quotient for quasiorders)");
    dim_cmd->add_option("file", file, "Relation file")->required();
    auto* hsdim_cmd = app.add_subcommand("hsdim", "Half-space dimension");
    hsdim_cmd->add_option("file", file, "Relation file")->required();

    auto* transform_cmd = app.add_subcommand("transform", "Linear realizer from a half-space realizer");
    transform_cmd->add_option("--gamma", file, "Quasiorder file")->required();
    transform_cmd->add_option("--realizer", files, "Half-space files")->required();
    transform_cmd->add_option("--mu", perm, "Linear order on the classes, as element names");
    transform_cmd->add_option("--istar", number, "Index of the part linearized against the reversed order");
    transform_cmd->add_flag("--alt", flag, "Use the reversal-set construction");

    auto* product_cmd = app.add_subcommand("product", "Direct product and its half-space verdict");
    product_cmd->add_option("files", files, "Factor files")->required();
    product_cmd->add_flag("--structural-only", flag, "Skip building the product");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List all quasiorders or half-spaces on N elements");
    enumerate_cmd->add_option("kind", word, "quasiorders or halfspaces")->required();
    enumerate_cmd->add_option("n", number, "Number of elements")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Replay a verification suite");
    oracle_cmd->add_option("suite", word, "Suite id");
    oracle_cmd->add_flag("--list", flag, "List suite ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_input;
    }

    try {
        if (*classify_cmd) return cmd_classify(file);
        if (*check_hs) return cmd_check_halfspace(file);
        if (*decompose_cmd) return cmd_decompose(file);
        if (*complement_cmd) return cmd_complement(file);
        if (*extend_cmd) return cmd_extend(file, perm);
        if (*tighten_cmd) return cmd_tighten(file, file2, perm);
        if (*linearize_cmd) return cmd_linearize(file, file2, flag);
        if (*dim_cmd) return cmd_dimension(file, false);
        if (*hsdim_cmd) return cmd_dimension(file, true);
        if (*transform_cmd) return cmd_transform(file, files, perm, number, flag);
        if (*product_cmd) return cmd_product(files, flag);
        if (*enumerate_cmd) return cmd_enumerate(word, number);
        if (*oracle_cmd) {
            if (!flag && word.empty()) {
                throw InputError("oracle needs a suite id or --list");
            }
            return cmd_oracle(word, flag);
        }
    } catch (const ResourceError& e) {
        std::cerr << "quord: resource cap: " << e.what() << "\n";
        return exit_resource;
    } catch (const Error& e) {
        std::cerr << "quord: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "quord: internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_input;
}
