#include "mteam/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "mteam/error.hpp"

namespace mteam {

namespace {

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

std::vector<std::string_view> split_cells(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        auto end = line.find(',', start);
        cells.push_back(trim(line.substr(start, end == std::string_view::npos ? end : end - start)));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return cells;
}

bool is_token(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c == ',' || c == '(' || c == ')' || c == '*' || c == ':' || c == ' ' || c == '\t') return false;
    return true;
}

Count parse_count_at(std::string_view s, std::size_t line, std::size_t col) {
    try {
        return parse_count(s);
    } catch (const InputError&) {
        throw ParseError("invalid count '" + std::string(s) + "'", line, col);
    }
}

}  // namespace

Multiteam load_multiteam(std::string_view text) {
    auto lines = split_lines(text);
    std::size_t ln = 0;
    while (ln < lines.size() && trim(lines[ln]).empty()) ++ln;
    if (ln == lines.size()) throw ParseError("missing header row", 1, 1);

    std::vector<Var> vars;
    bool has_count = false;
    std::set<std::string_view> seen;
    const auto header = split_cells(lines[ln]);
    const bool no_columns = trim(lines[ln]).empty();
    for (std::size_t c = 0; c < header.size() && !no_columns; ++c) {
        const auto name = header[c];
        if (name == "#count") {
            if (c + 1 != header.size()) throw ParseError("#count must be the last column", ln + 1, c + 1);
            has_count = true;
            continue;
        }
        if (!is_token(name) || name.front() == '#') throw ParseError("invalid variable name '" + std::string(name) + "'", ln + 1, c + 1);
        if (!seen.insert(name).second) throw ParseError("duplicate column '" + std::string(name) + "'", ln + 1, c + 1);
        vars.emplace_back(name);
    }
    const std::size_t width = vars.size() + (has_count ? 1 : 0);
    if (width == 0) throw ParseError("header names no columns", ln + 1, 1);

    std::vector<std::pair<Row, Count>> rows;
    for (++ln; ln < lines.size(); ++ln) {
        if (trim(lines[ln]).empty()) continue;
        const auto cells = split_cells(lines[ln]);
        if (cells.size() != width)
            throw ParseError("expected " + std::to_string(width) + " fields, got " + std::to_string(cells.size()), ln + 1, 1);
        Row r;
        for (std::size_t c = 0; c < vars.size(); ++c) {
            if (!is_token(cells[c])) throw ParseError("invalid value '" + std::string(cells[c]) + "'", ln + 1, c + 1);
            r.emplace_back(cells[c]);
        }
        Count m = has_count ? parse_count_at(cells.back(), ln + 1, width) : Count(1);
        rows.emplace_back(std::move(r), std::move(m));
    }
    return Multiteam(std::move(vars), std::move(rows));
}

std::string dump_multiteam(const Multiteam& t) {
    std::ostringstream out;
    for (const auto& v : t.vars()) out << v << ',';
    out << "#count\n";
    for (std::size_t i = 0; i < t.row_count(); ++i) {
        if (t.count(i) == 0) continue;
        for (const auto& a : t.row(i)) out << a << ',';
        out << t.count(i) << '\n';
    }
    return out.str();
}

Multistructure load_structure(std::string_view text) {
    auto lines = split_lines(text);
    std::map<Value, Count> domain;
    bool have_domain = false;
    std::map<std::string, Relation> relations;

    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        const auto line = trim(lines[ln]);
        if (line.empty() || line.front() == '#') continue;
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseError("expected 'domain:' or 'rel NAME/ARITY:'", ln + 1, 1);
        const auto head = trim(line.substr(0, colon));
        const auto body = line.substr(colon + 1);

        if (head == "domain") {
            if (have_domain) throw ParseError("second domain line", ln + 1, 1);
            have_domain = true;
            std::istringstream in{std::string(body)};
            std::string item;
            while (in >> item) {
                auto star = item.find('*');
                std::string name = item.substr(0, star);
                Count m = star == std::string::npos ? Count(1) : parse_count_at(item.substr(star + 1), ln + 1, colon + 2);
                if (!is_token(name)) throw ParseError("invalid domain element '" + item + "'", ln + 1, colon + 2);
                if (!domain.emplace(Value(name), m).second)
                    throw ParseError("domain element '" + name + "' listed twice", ln + 1, colon + 2);
            }
            continue;
        }

        if (head.substr(0, 4) != "rel " && head.substr(0, 4) != "rel\t")
            throw ParseError("unknown directive '" + std::string(head) + "'", ln + 1, 1);
        const auto sig = trim(head.substr(4));
        const auto slash = sig.find('/');
        if (slash == std::string_view::npos) throw ParseError("expected NAME/ARITY", ln + 1, 5);
        const std::string name(trim(sig.substr(0, slash)));
        if (!is_token(name)) throw ParseError("invalid relation name '" + name + "'", ln + 1, 5);
        const Count arity = parse_count_at(trim(sig.substr(slash + 1)), ln + 1, 5);
        if (arity > 64) throw ParseError("arity too large", ln + 1, 5);
        Relation rel{arity.convert_to<std::size_t>(), {}};

        std::size_t i = 0;
        while (true) {
            while (i < body.size() && (body[i] == ' ' || body[i] == '\t' || body[i] == '\r')) ++i;
            if (i == body.size()) break;
            const std::size_t col = colon + 2 + i;
            if (body[i] != '(') throw ParseError("expected '('", ln + 1, col);
            const auto close = body.find(')', i);
            if (close == std::string_view::npos) throw ParseError("unclosed tuple", ln + 1, col);
            const auto inside = trim(body.substr(i + 1, close - i - 1));
            Row tuple;
            if (!inside.empty())
                for (auto cell : split_cells(inside)) {
                    if (!is_token(cell)) throw ParseError("invalid value '" + std::string(cell) + "'", ln + 1, col);
                    tuple.emplace_back(cell);
                }
            if (tuple.size() != rel.arity)
                throw ParseError("tuple of length " + std::to_string(tuple.size()) + " in relation " + name + "/" +
                                     std::to_string(rel.arity),
                                 ln + 1, col);
            rel.tuples.insert(std::move(tuple));
            i = close + 1;
        }
        if (!relations.emplace(name, std::move(rel)).second)
            throw ParseError("relation '" + name + "' declared twice", ln + 1, 1);
    }
    if (!have_domain) throw ParseError("missing 'domain:' line", 1, 1);
    return Multistructure(Multiset(std::move(domain)), std::move(relations));
}

std::string dump_structure(const Multistructure& A) {
    std::ostringstream out;
    out << "domain:";
    for (const auto& [a, m] : A.domain().entries()) {
        if (m == 0) continue;
        out << ' ' << a;
        if (m != 1) out << '*' << m;
    }
    out << '\n';
    for (const auto& [name, rel] : A.relations()) {
        out << "rel " << name << '/' << rel.arity << ':';
        for (const auto& tuple : rel.tuples) {
            out << " (";
            for (std::size_t i = 0; i < tuple.size(); ++i) out << (i ? "," : "") << tuple[i];
            out << ')';
        }
        out << '\n';
    }
    return out.str();
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
    if (!out) throw InputError("error writing " + path.string());
}

InstanceFiles write_instance(const Instance& inst, const std::filesystem::path& dir, const std::string& stem) {
    std::filesystem::create_directories(dir);
    InstanceFiles files{dir / (stem + ".struct"), dir / (stem + ".csv"), dir / (stem + ".formula")};
    write_file(files.structure, dump_structure(inst.structure));
    write_file(files.team, dump_multiteam(inst.team));
    write_file(files.formula, print(inst.formula) + "\n");
    return files;
}

Instance read_instance(const InstanceFiles& files, const SemanticsConfig& cfg) {
    return {load_structure(read_file(files.structure)), load_multiteam(read_file(files.team)),
            parse(read_file(files.formula)), cfg};
}

}  // namespace mteam
