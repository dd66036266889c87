#include "lpadecomp/io.hpp"

#include "lpadecomp/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace lpadecomp {

using nlohmann::json;

namespace {

std::string position_of(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
    for (const auto& [key, value] : obj.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw InputError(where + ": unknown field '" + key + "'");
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw InputError(where + ": missing field '" + key + "'");
    if (!it->is_string())
        throw InputError(where + ": field '" + key + "' must be a string");
    return it->get<std::string>();
}

Multiplicity multiplicity_field(const json& obj, const std::string& where) {
    auto it = obj.find("multiplicity");
    if (it == obj.end())
        throw InputError(where + ": missing field 'multiplicity'");
    if (it->is_string() && it->get<std::string>() == "omega")
        return Multiplicity::omega();
    if (it->is_number_unsigned())
        return Multiplicity(it->get<std::uint64_t>());
    if (it->is_number_integer())
        throw InputError(where + ": multiplicity must be positive");
    throw InputError(where + ": multiplicity must be a positive integer or \"omega\"");
}

} // namespace

Graph parse_graph(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        // Drop the library's "[json.exception.parse_error.101] " prefix.
        if (auto cut = msg.find("] "); cut != std::string::npos)
            msg = msg.substr(cut + 2);
        if (msg.find("line ") == std::string::npos)
            msg = "at " + position_of(text, e.byte) + ": " + msg;
        throw InputError(msg);
    }
    if (!doc.is_object())
        throw InputError("graph document must be a JSON object");
    reject_unknown(doc, {"vertices", "bundles"}, "graph");

    auto vit = doc.find("vertices");
    if (vit == doc.end() || !vit->is_array())
        throw InputError("graph: 'vertices' must be an array of strings");
    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < vit->size(); ++i) {
        if (!(*vit)[i].is_string())
            throw InputError("vertices[" + std::to_string(i) + "] must be a string");
        vertices.push_back((*vit)[i].get<std::string>());
    }

    std::vector<BundleSpec> bundles;
    if (auto bit = doc.find("bundles"); bit != doc.end()) {
        if (!bit->is_array())
            throw InputError("graph: 'bundles' must be an array");
        for (std::size_t i = 0; i < bit->size(); ++i) {
            const json& b = (*bit)[i];
            std::string where = "bundles[" + std::to_string(i) + "]";
            if (!b.is_object())
                throw InputError(where + " must be an object");
            reject_unknown(b, {"id", "source", "target", "multiplicity"}, where);
            BundleSpec spec;
            spec.id = string_field(b, "id", where);
            where += " ('" + spec.id + "')";
            spec.source = string_field(b, "source", where);
            spec.target = string_field(b, "target", where);
            spec.multiplicity = multiplicity_field(b, where);
            bundles.push_back(std::move(spec));
        }
    }
    return Graph(std::move(vertices), bundles);
}

Graph load_graph(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw InputError("cannot read '" + file.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string serialize_graph(const Graph& g) {
    nlohmann::ordered_json doc;
    doc["vertices"] = g.vertex_names();
    doc["bundles"] = nlohmann::ordered_json::array();
    for (const Bundle& b : g.bundles()) {
        nlohmann::ordered_json j;
        j["id"] = b.id;
        j["source"] = g.vertex_name(b.source);
        j["target"] = g.vertex_name(b.target);
        if (b.multiplicity.is_omega())
            j["multiplicity"] = "omega";
        else
            j["multiplicity"] = b.multiplicity.value();
        doc["bundles"].push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
}

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string graph_dot(const Graph& g) {
    std::ostringstream out;
    out << "digraph E {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out << "  " << quoted(g.vertex_name(v)) << ";\n";
    for (const Bundle& b : g.bundles()) {
        std::string label = b.id;
        if (b.multiplicity.is_omega())
            label += " ∞";
        else if (b.multiplicity.value() > 1)
            label += " ×" + b.multiplicity.to_string();
        out << "  " << quoted(g.vertex_name(b.source)) << " -> " << quoted(g.vertex_name(b.target))
            << " [label=" << quoted(label) << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace lpadecomp
