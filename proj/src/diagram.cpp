/*
 * diagram.cpp
 *
 * This source file is part of the kirbyband project.
 *
 * Copyright 2026 The kirbyband Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "diagram.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace kb {

int cell_inputs(CellKind k) {
    switch (k) {
    case CellKind::identity:
    case CellKind::dot:
    case CellKind::twist_pos:
    case CellKind::twist_neg:
    case CellKind::comul:
    case CellKind::coact:
    case CellKind::dcoact:
    case CellKind::counit:
        return 1;
    case CellKind::crossing_pos:
    case CellKind::crossing_neg:
    case CellKind::cap:
    case CellKind::pac:
    case CellKind::mu:
    case CellKind::act:
    case CellKind::dact:
        return 2;
    case CellKind::cup:
    case CellKind::puc:
    case CellKind::unit:
        return 0;
    }
    return 0;
}

int cell_outputs(CellKind k) {
    switch (k) {
    case CellKind::identity:
    case CellKind::dot:
    case CellKind::twist_pos:
    case CellKind::twist_neg:
    case CellKind::mu:
    case CellKind::act:
    case CellKind::dact:
    case CellKind::unit:
        return 1;
    case CellKind::crossing_pos:
    case CellKind::crossing_neg:
    case CellKind::cup:
    case CellKind::puc:
    case CellKind::comul:
    case CellKind::coact:
    case CellKind::dcoact:
        return 2;
    case CellKind::cap:
    case CellKind::pac:
    case CellKind::counit:
        return 0;
    }
    return 0;
}

bool is_identity_like(CellKind k) {
    return k == CellKind::identity;
}

std::string role_name(Role r) {
    switch (r) {
    case Role::h1:
        return "h1";
    case Role::h2:
        return "h2";
    case Role::sf:
        return "sf";
    case Role::bd:
        return "bd";
    case Role::probe:
        return "probe";
    }
    return "?";
}

std::string color_token(const Color& c) {
    if (c.role == Role::probe)
        return "k" + std::to_string(c.degree);
    return role_name(c.role);
}

std::optional<Color> parse_color(const std::string& token) {
    if (token == "h1")
        return Color{Role::h1, 0};
    if (token == "h2")
        return Color{Role::h2, 0};
    if (token == "sf")
        return Color{Role::sf, 0};
    if (token == "bd")
        return Color{Role::bd, 0};
    if (token.size() >= 2 && token[0] == 'k') {
        int v = 0;
        const char* first = token.data() + 1;
        const char* last = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec == std::errc() && ptr == last && v >= 0)
            return Color{Role::probe, v};
    }
    return std::nullopt;
}

namespace {

struct TokenEntry {
    const char* text;
    CellKind kind;
};

constexpr TokenEntry kTokens[] = {
    {"|", CellKind::identity}, {"/+", CellKind::crossing_pos}, {"/-", CellKind::crossing_neg},
    {"cap", CellKind::cap},    {"pac", CellKind::pac},         {"dot", CellKind::dot},
    {"tw+", CellKind::twist_pos}, {"tw-", CellKind::twist_neg}, {"mu", CellKind::mu},
    {"cm", CellKind::comul},   {"eta", CellKind::unit},        {"eps", CellKind::counit},
    {"act", CellKind::act},    {"coa", CellKind::coact},       {"dact", CellKind::dact},
    {"dcoa", CellKind::dcoact},
};

std::optional<Cell> parse_cell(const std::string& tok, std::string& why) {
    for (const auto& e : kTokens)
        if (tok == e.text)
            return make_cell(e.kind);
    for (const char* prefix : {"cup:", "puc:"}) {
        std::string p(prefix);
        if (tok.rfind(p, 0) == 0) {
            auto color = parse_color(tok.substr(p.size()));
            if (!color) {
                why = "unknown color '" + tok.substr(p.size()) + "'";
                return std::nullopt;
            }
            return make_cup(p == "cup:" ? CellKind::cup : CellKind::puc, *color);
        }
    }
    why = "unknown token '" + tok + "'";
    return std::nullopt;
}

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

struct Token {
    std::string text;
    int column;
};

std::vector<Token> split_tokens(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i >= line.size())
            break;
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        out.push_back(Token{line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

std::string wire_text(const Wire& w) {
    if (w.color.role == Role::bd)
        return "bd";
    return color_token(w.color) + (w.orientation == Orientation::down ? "(down)" : "(up)");
}

} // namespace

Cell make_cell(CellKind k) {
    return Cell{k, std::nullopt};
}

Cell make_cup(CellKind k, Color c) {
    return Cell{k, c};
}

std::string cell_token(const Cell& c) {
    if (c.kind == CellKind::cup)
        return "cup:" + color_token(*c.created);
    if (c.kind == CellKind::puc)
        return "puc:" + color_token(*c.created);
    for (const auto& e : kTokens)
        if (e.kind == c.kind)
            return e.text;
    return "?";
}

DiagramParseError::DiagramParseError(std::vector<ParseError> errors)
    : std::runtime_error([&] {
          std::ostringstream out;
          for (size_t i = 0; i < errors.size(); ++i) {
              if (i)
                  out << "; ";
              out << errors[i].line << ":" << errors[i].column << ": " << errors[i].message;
          }
          return out.str();
      }()),
      errors_(std::move(errors)) {}

DiagramTypeError::DiagramTypeError(size_t r, size_t c, const std::string& message)
    : std::runtime_error("row " + std::to_string(r) + ", cell " + std::to_string(c) + ": " + message), row(r),
      cell(c) {}

std::vector<Wire> cell_output_wires(const Cell& cell, const std::vector<Wire>& in) {
    auto require = [](bool ok, const std::string& msg) {
        if (!ok)
            throw std::invalid_argument(msg);
    };
    auto is_band = [](const Wire& w) { return w.color.role == Role::bd; };
    auto is_sf = [](const Wire& w, Orientation o) { return w.color.role == Role::sf && w.orientation == o; };
    switch (cell.kind) {
    case CellKind::identity:
    case CellKind::dot:
    case CellKind::twist_pos:
    case CellKind::twist_neg:
        return in;
    case CellKind::crossing_pos:
    case CellKind::crossing_neg:
        return {in[1], in[0]};
    case CellKind::cup:
    case CellKind::puc: {
        Color c = *cell.created;
        if (c.role == Role::bd)
            return {Wire{c, Orientation::down}, Wire{c, Orientation::down}};
        if (cell.kind == CellKind::cup)
            return {Wire{c, Orientation::up}, Wire{c, Orientation::down}};
        return {Wire{c, Orientation::down}, Wire{c, Orientation::up}};
    }
    case CellKind::cap:
    case CellKind::pac: {
        if (is_band(in[0]) && is_band(in[1]))
            return {};
        Orientation first = cell.kind == CellKind::cap ? Orientation::down : Orientation::up;
        Orientation second = cell.kind == CellKind::cap ? Orientation::up : Orientation::down;
        require(in[0].color == in[1].color && in[0].orientation == first && in[1].orientation == second,
                "non-dual pair at " + cell_token(cell) + " (" + wire_text(in[0]) + ", " + wire_text(in[1]) + ")");
        return {};
    }
    case CellKind::mu:
        require(is_band(in[0]) && is_band(in[1]), "mu expects two band strands");
        return {in[0]};
    case CellKind::comul:
        require(is_band(in[0]), "cm expects a band strand");
        return {in[0], in[0]};
    case CellKind::unit:
        return {Wire{Color{Role::bd, 0}, Orientation::down}};
    case CellKind::counit:
        require(is_band(in[0]), "eps expects a band strand");
        return {};
    case CellKind::act:
        require(is_band(in[0]) && is_sf(in[1], Orientation::down),
                "act expects a band then a down-oriented surface strand");
        return {in[1]};
    case CellKind::coact:
        require(is_sf(in[0], Orientation::down), "coa expects a down-oriented surface strand");
        return {Wire{Color{Role::bd, 0}, Orientation::down}, in[0]};
    case CellKind::dact:
        require(is_sf(in[0], Orientation::up) && is_band(in[1]),
                "dact expects an up-oriented surface strand then a band");
        return {in[0]};
    case CellKind::dcoact:
        require(is_sf(in[0], Orientation::up), "dcoa expects an up-oriented surface strand");
        return {in[0], Wire{Color{Role::bd, 0}, Orientation::down}};
    }
    return in;
}

std::vector<std::vector<Wire>> infer_levels(const std::vector<Row>& rows, const std::vector<Wire>& input) {
    std::vector<std::vector<Wire>> levels{input};
    for (size_t r = 0; r < rows.size(); ++r) {
        const std::vector<Wire>& cur = levels.back();
        size_t need = 0;
        for (const auto& c : rows[r])
            need += static_cast<size_t>(cell_inputs(c.kind));
        if (need != cur.size())
            throw DiagramTypeError(r, 0,
                                   "arity mismatch: row consumes " + std::to_string(need) + " strands but " +
                                       std::to_string(cur.size()) + " are present");
        std::vector<Wire> next;
        size_t pos = 0;
        for (size_t ci = 0; ci < rows[r].size(); ++ci) {
            const Cell& c = rows[r][ci];
            size_t a = static_cast<size_t>(cell_inputs(c.kind));
            std::vector<Wire> in(cur.begin() + static_cast<long>(pos), cur.begin() + static_cast<long>(pos + a));
            try {
                auto out = cell_output_wires(c, in);
                next.insert(next.end(), out.begin(), out.end());
            } catch (const std::invalid_argument& e) {
                throw DiagramTypeError(r, ci, e.what());
            }
            pos += a;
        }
        levels.push_back(std::move(next));
    }
    return levels;
}

std::vector<std::vector<Wire>> infer_levels(const Diagram& d) {
    return infer_levels(d.rows, {});
}

Diagram parse_diagram(const std::string& text) {
    std::vector<ParseError> errors;
    Diagram d;
    bool have_category = false;
    bool in_body = false;
    bool ended = false;
    int end_line = 0;
    std::vector<std::vector<Token>> row_tokens;
    std::vector<int> row_lines;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        if (trim(line).empty())
            continue;
        auto toks = split_tokens(line);
        if (ended) {
            errors.push_back({lineno, toks[0].column, "content after 'end'"});
            continue;
        }
        if (in_body) {
            if (toks.size() == 1 && toks[0].text == "end") {
                ended = true;
                end_line = lineno;
                continue;
            }
            row_tokens.push_back(toks);
            row_lines.push_back(lineno);
            continue;
        }
        const std::string& kw = toks[0].text;
        if (kw == "diagram") {
            if (!have_category)
                errors.push_back({lineno, toks[0].column, "missing header: 'category N=<int> t=<int> H=<int>' must precede 'diagram'"});
            in_body = true;
            continue;
        }
        auto read_fields = [&](std::vector<std::string> keys) {
            std::vector<std::optional<int>> vals(keys.size());
            for (size_t i = 1; i < toks.size(); ++i) {
                const auto& tk = toks[i];
                auto eq = tk.text.find('=');
                bool matched = false;
                if (eq != std::string::npos) {
                    std::string key = tk.text.substr(0, eq);
                    std::string val = tk.text.substr(eq + 1);
                    for (size_t k = 0; k < keys.size(); ++k)
                        if (keys[k] == key) {
                            int v = 0;
                            auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
                            if (ec != std::errc() || ptr != val.data() + val.size()) {
                                errors.push_back({lineno, tk.column, "value of '" + key + "' is not an integer"});
                            } else {
                                vals[k] = v;
                            }
                            matched = true;
                        }
                }
                if (!matched)
                    errors.push_back({lineno, tk.column, "unexpected header field '" + tk.text + "'"});
            }
            for (size_t k = 0; k < keys.size(); ++k)
                if (!vals[k])
                    errors.push_back({lineno, toks[0].column, "header '" + kw + "' is missing '" + keys[k] + "='"});
            return vals;
        };
        if (kw == "category") {
            auto v = read_fields({"N", "t", "H"});
            if (v[0])
                d.header.N = *v[0];
            if (v[1])
                d.header.t = *v[1];
            if (v[2])
                d.header.H = *v[2];
            if (v[0] && *v[0] < 1)
                errors.push_back({lineno, toks[0].column, "N must be positive"});
            if (v[2] && *v[2] < 1)
                errors.push_back({lineno, toks[0].column, "H generator must be positive"});
            have_category = true;
        } else if (kw == "frobenius") {
            auto v = read_fields({"c"});
            d.header.c = v[0];
        } else if (kw == "module") {
            auto v = read_fields({"g"});
            d.header.g = v[0];
        } else {
            errors.push_back({lineno, toks[0].column, "unknown header keyword '" + kw + "'"});
        }
    }
    if (!have_category && !in_body)
        errors.push_back({std::max(lineno, 1), 1, "missing header: no 'category' line"});
    if (!in_body)
        errors.push_back({std::max(lineno, 1), 1, "missing 'diagram' section"});
    else if (!ended)
        errors.push_back({std::max(lineno, 1), 1, "missing 'end' after diagram body"});

    for (size_t r = 0; r < row_tokens.size(); ++r) {
        Row row;
        for (const auto& tk : row_tokens[r]) {
            std::string why;
            auto cell = parse_cell(tk.text, why);
            if (!cell)
                errors.push_back({row_lines[r], tk.column, why});
            else
                row.push_back(*cell);
        }
        d.rows.push_back(std::move(row));
    }
    if (!errors.empty())
        throw DiagramParseError(errors);

    try {
        auto levels = infer_levels(d);
        if (!levels.back().empty())
            errors.push_back({end_line, 1,
                              "open boundary: " + std::to_string(levels.back().size()) +
                                  " strands reach 'end' without being closed"});
    } catch (const DiagramTypeError& e) {
        int col = 1;
        if (e.row < row_tokens.size() && e.cell < row_tokens[e.row].size())
            col = row_tokens[e.row][e.cell].column;
        std::string msg = e.what();
        auto colon = msg.find(": ");
        errors.push_back({row_lines[e.row], col, colon == std::string::npos ? msg : msg.substr(colon + 2)});
    }
    if (!errors.empty())
        throw DiagramParseError(errors);
    return d;
}

std::string serialize(const Diagram& d) {
    std::ostringstream out;
    out << "category N=" << d.header.N << " t=" << d.header.t << " H=" << d.header.H << "\n";
    if (d.header.c)
        out << "frobenius c=" << *d.header.c << "\n";
    if (d.header.g)
        out << "module g=" << *d.header.g << "\n";
    out << "diagram\n";
    for (const auto& row : d.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i)
                out << ' ';
            out << cell_token(row[i]);
        }
        out << "\n";
    }
    out << "end\n";
    return out.str();
}

std::vector<Row> elementary_rows(const std::vector<Row>& rows, const std::vector<Wire>& input,
                                 std::vector<size_t>* level_map) {
    auto levels = infer_levels(rows, input);
    std::vector<Row> out;
    if (level_map)
        level_map->assign(rows.size() + 1, 0);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (level_map)
            (*level_map)[r] = out.size();
        const Row& row = rows[r];
        for (size_t k = 0; k < row.size(); ++k) {
            if (row[k].kind == CellKind::identity)
                continue;
            size_t left = 0, right = 0;
            for (size_t j = 0; j < k; ++j)
                left += static_cast<size_t>(cell_outputs(row[j].kind));
            for (size_t j = k + 1; j < row.size(); ++j)
                right += static_cast<size_t>(cell_inputs(row[j].kind));
            Row e(left, make_cell(CellKind::identity));
            e.push_back(row[k]);
            e.insert(e.end(), right, make_cell(CellKind::identity));
            out.push_back(std::move(e));
        }
    }
    if (level_map)
        (*level_map)[rows.size()] = out.size();
    return out;
}

Diagram elementary_form(const Diagram& d, std::vector<size_t>* level_map) {
    Diagram e;
    e.header = d.header;
    e.rows = elementary_rows(d.rows, {}, level_map);
    return e;
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
    Diagram u = a;
    if (!u.header.c)
        u.header.c = b.header.c;
    if (!u.header.g)
        u.header.g = b.header.g;
    u.rows.insert(u.rows.end(), b.rows.begin(), b.rows.end());
    return u;
}

Diagram mirror(const Diagram& d) {
    Diagram m = d;
    for (auto& row : m.rows)
        for (auto& c : row) {
            switch (c.kind) {
            case CellKind::crossing_pos:
                c.kind = CellKind::crossing_neg;
                break;
            case CellKind::crossing_neg:
                c.kind = CellKind::crossing_pos;
                break;
            case CellKind::twist_pos:
                c.kind = CellKind::twist_neg;
                break;
            case CellKind::twist_neg:
                c.kind = CellKind::twist_pos;
                break;
            default:
                break;
            }
        }
    return m;
}

} // namespace kb
