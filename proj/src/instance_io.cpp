#include "orthopack/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace orthopack {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

using Fields = std::map<std::string, std::string>;

Rational field(const Fields& f, const std::string& key) {
    auto it = f.find(key);
    if (it == f.end()) throw std::invalid_argument("instance: missing field '" + key + "'");
    return Rational::parse(it->second);
}

Shape shape_from_fields(const std::string& kind, const Fields& f) {
    if (kind == "lshape")
        return LShape(field(f, "lx"), field(f, "wx"), field(f, "ly"), field(f, "wy"));
    if (kind == "rect") {
        Rational w = field(f, "w"), h = field(f, "h");
        return LShape(w, w, h, h);
    }
    if (kind == "lskeleton") return LSkeleton(field(f, "lx"), field(f, "ly"));
    if (kind == "zshape")
        return ZShape(field(f, "w"), field(f, "a"), field(f, "b"), field(f, "ta"),
                      field(f, "tb"), field(f, "t"));
    if (kind == "zskeleton") return ZSkeleton(field(f, "w"), field(f, "a"), field(f, "b"));
    throw std::invalid_argument("instance: unknown kind '" + kind + "'");
}

void append_shape_fields(std::string& line, const Shape& s) {
    auto put = [&line](const char* k, const Rational& v) {
        line += ' ';
        line += k;
        line += ' ';
        line += v.str();
    };
    if (const auto* l = std::get_if<LShape>(&s)) {
        put("lx", l->lx), put("wx", l->wx), put("ly", l->ly), put("wy", l->wy);
    } else if (const auto* z = std::get_if<ZShape>(&s)) {
        put("w", z->w), put("a", z->a), put("b", z->b);
        put("ta", z->ta), put("tb", z->tb), put("t", z->t);
    } else if (const auto* l = std::get_if<LSkeleton>(&s)) {
        put("lx", l->lx), put("ly", l->ly);
    } else {
        const auto& z = std::get<ZSkeleton>(s);
        put("w", z.w), put("a", z.a), put("b", z.b);
    }
}

Rotation parse_rot(const std::string& s) {
    if (s == "r0") return Rotation::R0;
    if (s == "r90") return Rotation::R90;
    if (s == "r180") return Rotation::R180;
    if (s == "r270") return Rotation::R270;
    throw std::invalid_argument("instance: bad rotation '" + s + "'");
}

const char* rot_name(Rotation r) {
    switch (r) {
        case Rotation::R0: return "r0";
        case Rotation::R90: return "r90";
        case Rotation::R180: return "r180";
        default: return "r270";
    }
}

}  // namespace

std::vector<Shape> InstanceFile::shapes() const {
    std::vector<Shape> out;
    for (const auto& it : items) out.push_back(it.shape);
    return out;
}

bool InstanceFile::has_placements() const {
    for (const auto& it : items)
        if (!it.place) return false;
    return !items.empty();
}

Packing InstanceFile::to_packing() const {
    Packing p;
    for (const auto& it : items) {
        if (!it.place) throw std::invalid_argument("instance: item without placement");
        p.add(it.shape, *it.place);
    }
    return p;
}

InstanceFile parse_instance(std::istream& in) {
    InstanceFile f;
    std::string line;
    bool saw_kind = false;
    while (std::getline(in, line)) {
        auto toks = tokens(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "kind") {
            if (toks.size() != 2) throw std::invalid_argument("instance: bad kind line");
            f.kind = toks[1];
            saw_kind = true;
        } else if (toks[0] == "item") {
            if (!saw_kind) throw std::invalid_argument("instance: item before kind");
            if (f.kind == "binsorting") {
                if (toks.size() != 3 || toks[1] != "v")
                    throw std::invalid_argument("instance: binsorting items are 'item v <int>'");
                f.numbers.emplace_back(toks[2]);
                continue;
            }
            if (toks.size() % 2 != 1)
                throw std::invalid_argument("instance: item line has dangling field");
            Fields fields;
            for (std::size_t i = 1; i + 1 < toks.size(); i += 2) fields[toks[i]] = toks[i + 1];
            PackedItem item{shape_from_fields(f.kind, fields), std::nullopt, std::nullopt};
            if (fields.count("bin")) {
                Placement p;
                p.bin = static_cast<int>(Rational::parse(fields.at("bin")).floor());
                p.x = field(fields, "x");
                p.y = field(fields, "y");
                item.place = p;
            }
            if (fields.count("rot")) item.rot = parse_rot(fields.at("rot"));
            f.items.push_back(std::move(item));
        } else {
            if (toks.size() != 2) throw std::invalid_argument("instance: bad meta line: " + line);
            f.meta[toks[0]] = toks[1];
        }
    }
    if (!saw_kind) throw std::invalid_argument("instance: missing kind");
    return f;
}

InstanceFile parse_instance_string(const std::string& text) {
    std::istringstream ss(text);
    return parse_instance(ss);
}

InstanceFile load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_instance(in);
}

std::string format_instance(const InstanceFile& f) {
    std::string out = "kind " + f.kind + "\n";
    for (const auto& [k, v] : f.meta) out += k + " " + v + "\n";
    for (const auto& v : f.numbers) out += "item v " + v.str() + "\n";
    for (const auto& it : f.items) {
        std::string line = "item";
        append_shape_fields(line, it.shape);
        if (it.place) {
            line += " bin " + std::to_string(it.place->bin);
            line += " x " + it.place->x.str();
            line += " y " + it.place->y.str();
        }
        if (it.rot) {
            line += " rot ";
            line += rot_name(*it.rot);
        }
        out += line + "\n";
    }
    return out;
}

void save_instance(const InstanceFile& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << format_instance(f);
}

InstanceFile make_packing_file(const std::string& kind, const Packing& p) {
    InstanceFile f;
    f.kind = kind;
    for (const auto& [s, pl] : p.items) f.items.push_back({s, pl, std::nullopt});
    return f;
}

std::string format_sort_trace(const std::vector<SortGame::Move>& trace) {
    std::string out;
    long i = 1;
    for (const auto& mv : trace) {
        out += std::to_string(i++) + ", " + mv.value.str() + ", " + std::to_string(mv.array) +
               ", " + std::to_string(mv.slot) + "\n";
    }
    return out;
}

std::string format_zskel_trace(const std::vector<ZTraceRow>& trace) {
    std::string out;
    for (const auto& row : trace) {
        out += std::to_string(row.i) + ", " + row.z.w.str() + ", " + row.z.a.str() + ", " +
               row.z.b.str() + ", " + row.x_response.str() + "\n";
    }
    return out;
}

std::vector<ZTraceRow> parse_zskel_trace(std::istream& in) {
    std::vector<ZTraceRow> out;
    std::string line;
    while (std::getline(in, line)) {
        for (auto& c : line)
            if (c == ',') c = ' ';
        auto toks = tokens(line);
        if (toks.empty()) continue;
        if (toks.size() != 5) throw std::invalid_argument("zskel trace: bad line: " + line);
        ZTraceRow row;
        row.i = std::stol(toks[0]);
        row.z = ZSkeleton(Rational::parse(toks[1]), Rational::parse(toks[2]),
                          Rational::parse(toks[3]));
        row.x_response = Rational::parse(toks[4]);
        out.push_back(row);
    }
    return out;
}

}  // namespace orthopack
