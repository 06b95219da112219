#include "wz/manifest.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "wz/errors.hpp"

namespace wz {

namespace {

// --- polynomial expression parser ---

struct ExprParser {
    const std::string& s;
    size_t pos = 0;
    int line;
    const std::vector<std::string>& vars;  // includes g when admitted
    int gi;                                // index of g, or -1

    ExprParser(const std::string& text, int line_no,
               const std::vector<std::string>& vs, int g_index)
        : s(text), line(line_no), vars(vs), gi(g_index) {}

    int col() const { return static_cast<int>(pos) + 1; }
    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    IntMPoly parse() {
        IntMPoly e = expr();
        skip_ws();
        if (pos != s.size()) throw ParseError(line, col(), "end of expression");
        return e;
    }

    IntMPoly expr() {
        bool neg = false;
        if (eat('+')) {
        } else if (eat('-')) {
            neg = true;
        }
        IntMPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    IntMPoly term() {
        IntMPoly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    IntMPoly factor() {
        IntMPoly base = atom();
        if (eat('^')) {
            skip_ws();
            if (pos >= s.size() || !isdigit(static_cast<unsigned char>(s[pos])))
                throw ParseError(line, col(), "integer exponent");
            unsigned e = 0;
            while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
                e = e * 10 + static_cast<unsigned>(s[pos] - '0');
                if (e > 4096) throw ParseError(line, col(), "smaller exponent");
                ++pos;
            }
            return base.pow(e);
        }
        return base;
    }

    IntMPoly atom() {
        skip_ws();
        if (pos >= s.size())
            throw ParseError(line, col(), "number, variable or (");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            IntMPoly inner = expr();
            if (!eat(')')) throw ParseError(line, col(), ")");
            return inner;
        }
        if (isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos])))
                digits.push_back(s[pos++]);
            return IntMPoly::constant(vars, BigInt(digits));
        }
        if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int start_col = col();
            std::string name;
            while (pos < s.size() &&
                   (isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                name.push_back(s[pos++]);
            for (size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == name) return IntMPoly::variable(vars, i);
            if (name == "g")
                throw UnboundVariable(
                    "symbol g needs an extension field (a > 1), at line " +
                    std::to_string(line) + ", col " + std::to_string(start_col));
            throw UnboundVariable("unbound variable '" + name + "' at line " +
                                  std::to_string(line) + ", col " +
                                  std::to_string(start_col));
        }
        throw ParseError(line, col(), "number, variable or (");
    }
};

// --- block structure ---

struct RawLine {
    int line_no;
    std::string key;
    std::string value;
};

struct RawBlock {
    int line_no;
    std::string section;  // "field", "variety", "action", "declare"
    std::string name;
    std::vector<RawLine> lines;

    std::optional<std::string> get(const std::string& key) const {
        for (const auto& l : lines)
            if (l.key == key) return l.value;
        return std::nullopt;
    }
    std::vector<RawLine> all(const std::string& key) const {
        std::vector<RawLine> out;
        for (const auto& l : lines)
            if (l.key == key) out.push_back(l);
        return out;
    }
    int line_of(const std::string& key) const {
        for (const auto& l : lines)
            if (l.key == key) return l.line_no;
        return line_no;
    }
};

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    return out;
}

long long to_int(const std::string& s, int line_no) {
    if (s.empty()) throw ParseError(line_no, 1, "integer");
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ParseError(line_no, 1, "integer");
    for (; i < s.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError(line_no, static_cast<int>(i) + 1, "integer");
    return std::stoll(s);
}

std::vector<RawBlock> lex_blocks(const std::string& text) {
    std::vector<RawBlock> blocks;
    int line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        std::string raw = text.substr(
            start, end == std::string::npos ? std::string::npos : end - start);
        start = end == std::string::npos ? text.size() + 1 : end + 1;
        ++line_no;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string l = trim(raw);
        if (l.empty()) continue;
        if (l.front() == '[') {
            if (l.back() != ']') throw ParseError(line_no, static_cast<int>(l.size()), "]");
            std::string inner = trim(l.substr(1, l.size() - 2));
            size_t sp = inner.find_first_of(" \t");
            RawBlock b;
            b.line_no = line_no;
            b.section = sp == std::string::npos ? inner : inner.substr(0, sp);
            b.name = sp == std::string::npos ? "" : trim(inner.substr(sp));
            blocks.push_back(std::move(b));
            continue;
        }
        size_t eq = l.find('=');
        if (eq == std::string::npos)
            throw ParseError(line_no, 1, "key = value or [section]");
        if (blocks.empty())
            throw ParseError(line_no, 1, "a [section] header before values");
        RawLine rl;
        rl.line_no = line_no;
        rl.key = trim(l.substr(0, eq));
        rl.value = trim(l.substr(eq + 1));
        if (rl.key.empty()) throw ParseError(line_no, 1, "key before =");
        blocks.back().lines.push_back(std::move(rl));
    }
    return blocks;
}

std::vector<std::string> poly_vars(const std::vector<std::string>& declared,
                                   const FqField& field) {
    std::vector<std::string> vs = declared;
    if (field.a() > 1) vs.push_back("g");
    return vs;
}

FqElem const_elem(const std::string& text, const FqField& field, int line_no) {
    std::vector<std::string> vs = poly_vars({}, field);
    ExprParser p(text, line_no, vs, field.a() > 1 ? 0 : -1);
    IntMPoly e = p.parse();
    return mpoly_eval(e, {}, field);
}

}  // namespace

IntMPoly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                    const FqField& field, int line_no) {
    std::vector<std::string> vs = poly_vars(vars, field);
    ExprParser p(text, line_no, vs, field.a() > 1 ? static_cast<int>(vars.size()) : -1);
    return p.parse().reduce_mod(BigInt(field.p()));
}

const VarietySpec& Manifest::variety(const std::string& name) const {
    auto it = varieties.find(name);
    if (it == varieties.end())
        throw UnboundVariable("no variety named '" + name + "' in the manifest");
    return it->second;
}

const GroupAction& Manifest::action(const std::string& name) const {
    auto it = actions.find(name);
    if (it == actions.end())
        throw UnboundVariable("no action named '" + name + "' in the manifest");
    return it->second;
}

Manifest parse_manifest(const std::string& text) {
    auto blocks = lex_blocks(text);

    // field block first
    Manifest m;
    bool have_field = false;
    for (const auto& b : blocks) {
        if (b.section != "field") continue;
        auto ps = b.get("p");
        auto as = b.get("a");
        if (!ps || !as) throw ParseError(b.line_no, 1, "p = ... and a = ...");
        m.field = FqField::make(static_cast<uint32_t>(to_int(*ps, b.line_of("p"))),
                                static_cast<uint32_t>(to_int(*as, b.line_of("a"))));
        have_field = true;
        break;
    }
    if (!have_field) throw ParseError(1, 1, "a [field] block");

    // collect raw variety and action blocks
    std::map<std::string, const RawBlock*> raw_vars, raw_acts;
    for (const auto& b : blocks) {
        if (b.section == "variety") {
            if (b.name.empty()) throw ParseError(b.line_no, 1, "a variety name");
            if (!raw_vars.emplace(b.name, &b).second)
                throw ParseError(b.line_no, 1, "a fresh variety name");
        } else if (b.section == "action") {
            if (b.name.empty()) throw ParseError(b.line_no, 1, "an action name");
            if (!raw_acts.emplace(b.name, &b).second)
                throw ParseError(b.line_no, 1, "a fresh action name");
        } else if (b.section == "declare") {
            for (const auto& l : b.lines) m.declares[l.key] = l.value;
        } else if (b.section != "field") {
            throw ParseError(b.line_no, 1,
                             "[field], [variety], [action] or [declare]");
        }
    }

    // resolve varieties with cycle detection
    std::set<std::string> in_progress;
    std::function<const VarietySpec&(const std::string&, int)> resolve =
        [&](const std::string& name, int ref_line) -> const VarietySpec& {
        auto done = m.varieties.find(name);
        if (done != m.varieties.end()) return done->second;
        auto raw_it = raw_vars.find(name);
        if (raw_it == raw_vars.end())
            throw UnboundVariable("no variety named '" + name +
                                  "' (referenced at line " +
                                  std::to_string(ref_line) + ")");
        if (!in_progress.insert(name).second)
            throw ParseError(raw_it->second->line_no, 1,
                             "an acyclic variety reference chain");
        const RawBlock& b = *raw_it->second;
        auto kind = b.get("kind");
        if (!kind) throw ParseError(b.line_no, 1, "kind = ...");

        VarietySpec spec;
        if (*kind == "affine" || *kind == "projective") {
            auto vars_s = b.get("vars");
            if (!vars_s) throw ParseError(b.line_no, 1, "vars = ...");
            std::vector<std::string> vars = split_commas(*vars_s);
            for (size_t i = 0; i < vars.size(); ++i) {
                if (vars[i].empty() || vars[i] == "g")
                    throw ParseError(b.line_of("vars"), 1, "a usable variable name");
                for (size_t j = i + 1; j < vars.size(); ++j)
                    if (vars[i] == vars[j])
                        throw ParseError(b.line_of("vars"), 1,
                                         "distinct variable names");
            }
            std::vector<IntMPoly> eqs;
            for (const auto& l : b.all("eq"))
                eqs.push_back(parse_poly(l.value, vars, m.field, l.line_no));
            spec = (*kind == "affine")
                       ? make_affine(m.field, static_cast<uint32_t>(vars.size()),
                                     std::move(eqs), name)
                       : make_projective(m.field,
                                         static_cast<uint32_t>(vars.size()),
                                         std::move(eqs), name);
        } else if (*kind == "product") {
            auto fs = b.get("factors");
            if (!fs) throw ParseError(b.line_no, 1, "factors = ...");
            std::vector<VarietySpec> parts;
            for (const auto& f : split_commas(*fs))
                parts.push_back(resolve(f, b.line_of("factors")));
            spec = make_product(std::move(parts), name);
        } else if (*kind == "union") {
            auto cs = b.get("components");
            if (!cs) throw ParseError(b.line_no, 1, "components = ...");
            std::vector<VarietySpec> parts;
            for (const auto& c : split_commas(*cs))
                parts.push_back(resolve(c, b.line_of("components")));
            spec = make_union(std::move(parts), name);
        } else if (*kind == "translate") {
            auto amb = b.get("ambient");
            auto slot_s = b.get("slot");
            if (!amb || !slot_s)
                throw ParseError(b.line_no, 1, "ambient = ... and slot = ...");
            VarietySpec ambient = resolve(*amb, b.line_of("ambient"));
            uint32_t slot =
                static_cast<uint32_t>(to_int(*slot_s, b.line_of("slot")));
            if (ambient.kind != VarietySpec::Kind::Product ||
                slot >= ambient.parts.size())
                throw ParseError(b.line_no, 1, "a product ambient and valid slot");
            VarietySpec curve = b.get("curve")
                                    ? resolve(*b.get("curve"), b.line_of("curve"))
                                    : ambient.parts[slot];
            std::vector<std::vector<FqElem>> fixed(ambient.parts.size());
            for (uint32_t j = 0; j < ambient.parts.size(); ++j) {
                if (j == slot) continue;
                auto fx = b.get("fix_" + std::to_string(j));
                if (!fx)
                    throw ParseError(b.line_no, 1,
                                     "fix_" + std::to_string(j) + " = ...");
                for (const auto& cs :
                     split_commas(*fx))
                    fixed[j].push_back(const_elem(
                        cs, m.field, b.line_of("fix_" + std::to_string(j))));
            }
            spec = make_translate_embed(std::move(ambient), slot, std::move(curve),
                                        std::move(fixed), name);
        } else {
            throw ParseError(b.line_of("kind"), 1,
                             "affine, projective, product, union or translate");
        }
        in_progress.erase(name);
        auto [it, ok] = m.varieties.emplace(name, std::move(spec));
        (void)ok;
        return it->second;
    };
    for (const auto& [name, blk] : raw_vars) resolve(name, blk->line_no);

    // actions: per-slot maps over the slot variety's coordinates
    for (const auto& [name, blk] : raw_acts) {
        const RawBlock& b = *blk;
        auto on = b.get("on");
        auto order_s = b.get("order");
        if (!on || !order_s)
            throw ParseError(b.line_no, 1, "on = ... and order = ...");
        const VarietySpec& target = m.variety(*on);
        uint32_t slots = target.kind == VarietySpec::Kind::Product
                             ? static_cast<uint32_t>(target.parts.size())
                             : 1;
        GroupAction act;
        act.order = static_cast<uint32_t>(to_int(*order_s, b.line_of("order")));
        if (auto df = b.get("declared_free")) act.declared_free = *df == "true";
        act.slot_maps.resize(slots);
        for (uint32_t j = 0; j < slots; ++j) {
            const VarietySpec& W =
                target.kind == VarietySpec::Kind::Product ? target.parts[j] : target;
            if (W.kind != VarietySpec::Kind::Affine &&
                W.kind != VarietySpec::Kind::Projective)
                throw ParseError(b.line_no, 1, "explicit slot coordinates");
            // recover the slot's variable names from its equations, else
            // default names x0..x{n-1}
            std::vector<std::string> vars;
            if (!W.equations.empty()) {
                for (const auto& v : W.equations[0].vars())
                    if (v != "g") vars.push_back(v);
            } else {
                for (uint32_t c = 0; c < W.coord_count; ++c)
                    vars.push_back("x" + std::to_string(c));
            }
            auto reps = b.all("map_" + std::to_string(j));
            if (reps.empty())
                throw ParseError(b.line_no, 1, "map_" + std::to_string(j) + " = ...");
            for (const auto& l : reps) {
                std::vector<IntMPoly> coords;
                for (const auto& cs : split_commas(l.value))
                    coords.push_back(parse_poly(cs, vars, m.field, l.line_no));
                if (coords.size() != W.coord_count)
                    throw ParseError(l.line_no, 1,
                                     std::to_string(W.coord_count) +
                                         " map coordinates");
                act.slot_maps[j].reps.push_back(std::move(coords));
            }
        }
        m.actions.emplace(name, std::move(act));
    }

    // default variety
    if (auto it = m.declares.find("main"); it != m.declares.end())
        m.default_variety = it->second;
    else if (m.varieties.count("main"))
        m.default_variety = "main";
    else if (m.varieties.size() == 1)
        m.default_variety = m.varieties.begin()->first;

    return m;
}

}  // namespace wz
