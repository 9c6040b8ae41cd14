#include "multiseq/parse.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace multiseq {

namespace {

struct Line {
    std::string text;
    int number;
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> out;
    std::string cur;
    int n = 1;
    for (char c : text) {
        if (c == '\n') {
            out.push_back({cur, n});
            cur.clear();
            ++n;
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back({cur, n});
    return out;
}

bool is_ident(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

[[noreturn]] void fail(const std::string& msg, int line, int col) {
    throw parse_error(msg + " at " + std::to_string(line) + ":" + std::to_string(col), line, col);
}

/// Split "p1, p2, p3" into sourced pieces, tracking column offsets.
std::vector<SourcedText> split_polys(const std::string& body, int line, int col0) {
    std::vector<SourcedText> out;
    int depth = 0;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
        std::size_t a = start;
        while (a < end && std::isspace(static_cast<unsigned char>(body[a]))) ++a;
        std::size_t b = end;
        while (b > a && std::isspace(static_cast<unsigned char>(body[b - 1]))) --b;
        if (a == b) fail("empty polynomial entry", line, col0 + static_cast<int>(start));
        out.push_back({body.substr(a, b - a), line, col0 + static_cast<int>(a)});
    };
    for (std::size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            flush(i);
            start = i + 1;
        }
    }
    flush(body.size());
    return out;
}

unsigned long parse_ulong(const std::string& s, int line, int col) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        fail("expected a nonnegative integer, got '" + s + "'", line, col);
    if (s.size() > 18) fail("integer too large", line, col);
    return std::stoul(s);
}

bool parse_bool(const std::string& s, int line, int col) {
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    fail("expected true or false, got '" + s + "'", line, col);
}

void apply_option(ProblemOptions& opts, const std::string& key, const std::string& value,
                  int line, int col) {
    if (key == "seed")
        opts.seed = parse_ulong(value, line, col);
    else if (key == "seeds")
        opts.seeds = static_cast<int>(parse_ulong(value, line, col));
    else if (key == "route") {
        if (value != "A" && value != "B" && value != "C")
            fail("route must be A, B or C, got '" + value + "'", line, col);
        opts.route = value[0];
    } else if (key == "max_n")
        opts.max_n = static_cast<int>(parse_ulong(value, line, col));
    else if (key == "grid_start")
        opts.grid_start = static_cast<int>(parse_ulong(value, line, col));
    else if (key == "grid_cap")
        opts.grid_cap = static_cast<int>(parse_ulong(value, line, col));
    else if (key == "grid_stride")
        opts.grid_stride = static_cast<int>(parse_ulong(value, line, col));
    else if (key == "oracle")
        opts.oracle = parse_bool(value, line, col);
    else if (key == "equidimensional")
        opts.equidimensional = parse_bool(value, line, col);
    else if (key == "join")
        opts.join = parse_bool(value, line, col);
    else
        fail("unknown option '" + key + "'", line, col);
}

ProblemFile parse_text_problem(const std::string& text) {
    ProblemFile file;
    bool saw_char = false, saw_vars = false;
    for (const auto& raw : split_lines(text)) {
        std::string line = raw.text;
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        // tokenize the head word
        std::istringstream iss(line);
        std::string head;
        if (!(iss >> head)) continue;
        const int col_head = static_cast<int>(line.find(head)) + 1;

        if (head == "char") {
            std::string v;
            if (!(iss >> v)) fail("char needs a value", raw.number, col_head);
            file.characteristic = parse_ulong(v, raw.number, col_head + 5);
            saw_char = true;
        } else if (head == "vars") {
            std::string v;
            while (iss >> v) {
                if (!is_ident(v)) fail("bad variable name '" + v + "'", raw.number, col_head);
                file.variables.push_back(v);
            }
            if (file.variables.empty()) fail("vars needs at least one name", raw.number, col_head);
            saw_vars = true;
        } else if (head == "quotient") {
            auto pos = line.find("quotient") + 8;
            if (line.find_first_not_of(" \t", pos) == std::string::npos)
                fail("quotient needs at least one polynomial", raw.number, col_head);
            auto polys = split_polys(line.substr(pos), raw.number, static_cast<int>(pos) + 1);
            file.quotient.insert(file.quotient.end(), polys.begin(), polys.end());
        } else if (head == "ideal") {
            std::string label, eq;
            if (!(iss >> label)) fail("ideal needs a label", raw.number, col_head);
            if (!is_ident(label)) fail("bad ideal label '" + label + "'", raw.number, col_head);
            if (file.find_ideal(label))
                fail("duplicate ideal label '" + label + "'", raw.number, col_head);
            auto eqpos = line.find('=');
            if (eqpos == std::string::npos) fail("ideal line needs '='", raw.number, col_head);
            auto body = line.substr(eqpos + 1);
            if (body.find_first_not_of(" \t") == std::string::npos) {
                file.ideals.push_back({label, {}});  // explicitly empty: the zero ideal
            } else {
                file.ideals.push_back(
                    {label, split_polys(body, raw.number, static_cast<int>(eqpos) + 2)});
            }
        } else if (head == "task") {
            if (!file.task.name.empty()) fail("duplicate task line", raw.number, col_head);
            if (!(iss >> file.task.name)) fail("task needs a name", raw.number, col_head);
            std::string arg;
            while (iss >> arg) file.task.args.push_back(arg);
        } else if (head == "option") {
            std::string key, value;
            if (!(iss >> key >> value)) fail("option needs a key and a value", raw.number, col_head);
            apply_option(file.options, key, value, raw.number, col_head);
        } else {
            fail("unknown directive '" + head + "'", raw.number, col_head);
        }
    }
    if (!saw_vars) fail("missing vars line", 1, 1);
    (void)saw_char;
    return file;
}

std::pair<int, int> offset_to_pos(const std::string& text, std::size_t offset) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

ProblemFile parse_json_problem(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = offset_to_pos(text, e.byte);
        fail(std::string("JSON: ") + e.what(), line, col);
    }
    ProblemFile file;
    try {
        if (j.contains("char")) file.characteristic = j["char"].get<unsigned long>();
        for (const auto& v : j.at("vars")) file.variables.push_back(v.get<std::string>());
        if (j.contains("quotient"))
            for (const auto& q : j["quotient"]) file.quotient.push_back({q.get<std::string>(), 1, 1});
        if (j.contains("ideals"))
            for (const auto& [label, gens] : j["ideals"].items()) {
                std::vector<SourcedText> list;
                for (const auto& g : gens) list.push_back({g.get<std::string>(), 1, 1});
                file.ideals.push_back({label, std::move(list)});
            }
        if (j.contains("task")) {
            file.task.name = j["task"].value("name", "");
            if (j["task"].contains("args"))
                for (const auto& a : j["task"]["args"])
                    file.task.args.push_back(a.get<std::string>());
        }
        if (j.contains("options")) {
            for (const auto& [key, value] : j["options"].items()) {
                std::string s = value.is_string() ? value.get<std::string>() : value.dump();
                apply_option(file.options, key, s, 1, 1);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        fail(std::string("JSON: ") + e.what(), 1, 1);
    }
    if (file.variables.empty()) fail("missing vars array", 1, 1);
    return file;
}

}  // namespace

ProblemFile parse_problem_file(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_json_problem(text);
        break;
    }
    return parse_text_problem(text);
}

std::string print_problem_file(const ProblemFile& file) {
    std::ostringstream out;
    out << "char " << file.characteristic << "\n";
    out << "vars";
    for (const auto& v : file.variables) out << " " << v;
    out << "\n";
    if (!file.quotient.empty()) {
        out << "quotient ";
        for (std::size_t i = 0; i < file.quotient.size(); ++i)
            out << (i ? ", " : "") << file.quotient[i].text;
        out << "\n";
    }
    for (const auto& [label, gens] : file.ideals) {
        out << "ideal " << label << " =";
        for (std::size_t i = 0; i < gens.size(); ++i) out << (i ? "," : "") << " " << gens[i].text;
        out << "\n";
    }
    if (!file.task.name.empty()) {
        out << "task " << file.task.name;
        for (const auto& a : file.task.args) out << " " << a;
        out << "\n";
    }
    const auto& o = file.options;
    out << "option seed " << o.seed << "\n";
    out << "option seeds " << o.seeds << "\n";
    out << "option route " << o.route << "\n";
    out << "option max_n " << o.max_n << "\n";
    out << "option grid_start " << o.grid_start << "\n";
    out << "option grid_cap " << o.grid_cap << "\n";
    out << "option grid_stride " << o.grid_stride << "\n";
    if (o.oracle) out << "option oracle " << (*o.oracle ? "true" : "false") << "\n";
    out << "option equidimensional " << (o.equidimensional ? "true" : "false") << "\n";
    out << "option join " << (o.join ? "true" : "false") << "\n";
    return out.str();
}

}  // namespace multiseq
