#include "basesize/oracle/group_spec.hpp"

#include <algorithm>
#include <charconv>

#include "basesize/errors.hpp"

namespace basesize::oracle {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

unsigned parse_unsigned(std::string_view s, std::string_view what) {
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw InputError("bad " + std::string(what) + ": '" + std::string(s) + "'");
    }
    return value;
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
    GroupSpec spec;
    spec.text = std::string(text);
    // Generators may contain '/' only as a separator, so split on it first.
    const auto pieces = split(text, '/');
    const auto head = pieces.front();
    const auto colon = head.find(':');
    if (colon == std::string_view::npos) throw InputError("group spec needs '<kind>:<value>': " + spec.text);
    const auto kind = head.substr(0, colon);
    const auto value = head.substr(colon + 1);

    if (kind == "sn" || kind == "an" || kind == "pgl2") {
        spec.base = kind == "sn" ? GroupSpec::Base::symmetric
                  : kind == "an" ? GroupSpec::Base::alternating
                                 : GroupSpec::Base::pgl2;
        spec.param = parse_unsigned(value, kind);
    } else if (kind == "gens") {
        spec.base = GroupSpec::Base::generators;
        std::size_t degree = 0;
        std::vector<std::string_view> cycles;
        for (auto g : split(value, ';')) {
            if (g.empty()) continue;
            const bool marked = g.front() == '!';
            spec.marks.push_back(marked ? -1 : 1);
            if (marked) g.remove_prefix(1);
            degree = std::max(degree, Perm::from_cycles(g).degree());
            cycles.push_back(g);
        }
        for (auto g : cycles) spec.generators.push_back(Perm::from_cycles(g, degree));
        spec.param = static_cast<unsigned>(degree);
        if (degree == 0) throw InputError("generator list moves no points: " + spec.text);
    } else {
        throw InputError("unknown group kind '" + std::string(kind) + "'");
    }

    for (std::size_t i = 1; i < pieces.size(); ++i) {
        const auto piece = pieces[i];
        const auto c = piece.find(':');
        if (c == std::string_view::npos) throw InputError("bad action suffix '" + std::string(piece) + "'");
        const auto name = piece.substr(0, c);
        const auto arg = piece.substr(c + 1);
        GroupSpec::Suffix suffix{};
        if (name == "subsets") {
            suffix.kind = GroupSpec::Suffix::Kind::subsets;
            suffix.a = parse_unsigned(arg, "subset size");
        } else if (name == "partitions") {
            const auto x = arg.find('x');
            if (x == std::string_view::npos) throw InputError("partitions suffix needs <r>x<s>");
            suffix.kind = GroupSpec::Suffix::Kind::partitions;
            suffix.a = parse_unsigned(arg.substr(0, x), "block count");
            suffix.b = parse_unsigned(arg.substr(x + 1), "block size");
        } else if (name == "wreath") {
            suffix.kind = GroupSpec::Suffix::Kind::wreath;
            suffix.a = parse_unsigned(arg, "wreath degree");
        } else {
            throw InputError("unknown action suffix '" + std::string(name) + "'");
        }
        spec.suffixes.push_back(suffix);
    }
    return spec;
}

LabelMode parse_label_mode(std::string_view text) {
    if (text.empty() || text == "default") return LabelMode::standard;
    if (text == "sgn") return LabelMode::sgn;
    if (text == "auto") return LabelMode::automatic;
    throw InputError("labels must be sgn or auto");
}

InducedAction build_action(const GroupSpec& spec, LabelMode mode, const Limits& limits) {
    std::shared_ptr<const LabeledGroup> group;
    switch (spec.base) {
        case GroupSpec::Base::symmetric:
            group = std::make_shared<LabeledGroup>(symmetric_group(spec.param, limits));
            break;
        case GroupSpec::Base::alternating:
            group = std::make_shared<LabeledGroup>(alternating_group(spec.param, limits));
            break;
        case GroupSpec::Base::pgl2: {
            auto g = pgl2(spec.param, limits);
            group = mode == LabelMode::sgn ? with_sign_labels(g) : std::make_shared<LabeledGroup>(std::move(g));
            break;
        }
        case GroupSpec::Base::generators: {
            const bool marked = std::find(spec.marks.begin(), spec.marks.end(), -1) != spec.marks.end();
            const bool use_marks = mode == LabelMode::automatic || (mode == LabelMode::standard && marked);
            std::vector<int> labels;
            for (std::size_t i = 0; i < spec.generators.size(); ++i) {
                labels.push_back(use_marks ? spec.marks[i] : spec.generators[i].sign());
            }
            auto g = closure(spec.param, spec.generators, labels, limits);
            g.name = "<" + spec.text.substr(0, spec.text.find('/')) + ">";
            group = std::make_shared<LabeledGroup>(std::move(g));
            break;
        }
    }

    auto action = natural_action(group);
    for (const auto& suffix : spec.suffixes) {
        switch (suffix.kind) {
            case GroupSpec::Suffix::Kind::subsets:
                if (action.group->degree != action.degree) throw InputError("subsets suffix must follow the base group");
                action = act_on_subsets(action.group, suffix.a, limits);
                break;
            case GroupSpec::Suffix::Kind::partitions:
                if (action.group->degree != action.degree) throw InputError("partitions suffix must follow the base group");
                action = act_on_uniform_partitions(action.group, suffix.a, suffix.b, limits);
                break;
            case GroupSpec::Suffix::Kind::wreath:
                action = product_action_wreath(action, suffix.a, {}, limits);
                break;
        }
    }
    return action;
}

}  // namespace basesize::oracle
