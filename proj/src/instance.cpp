#include "dimerforge/instance.hpp"

#include <fstream>
#include <sstream>

namespace dimerforge {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ConfigError, "cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<Id> parse_ids(const std::string& csv) {
    std::vector<Id> out;
    std::stringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 18)
            throw Error(ErrorKind::ParseError, "bad id '" + tok + "'");
        out.push_back(std::stoll(tok));
    }
    return out;
}

std::string join_ids(const std::vector<Id>& ids) {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
    return s;
}

InstanceFile parse_instance(const std::string& text) {
    InstanceFile inst;
    std::ostringstream graph_text;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = line.substr(0, line.find('#'));
        std::istringstream ls(body);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty() || tok[0] == "v" || tok[0] == "e") {
            graph_text << line << '\n';
            continue;
        }
        graph_text << '\n';
        auto need = [&](std::size_t n) {
            if (tok.size() != n)
                throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": '" + tok[0] + "' takes " +
                                                       std::to_string(n - 1) + " field(s)");
        };
        try {
            if (tok[0] == "kind") {
                need(2);
                inst.kind = tok[1];
            } else if (tok[0] == "path") {
                need(2);
                inst.path = parse_ids(tok[1]);
            } else if (tok[0] == "axis") {
                need(2);
                inst.axis = parse_rational(tok[1]);
            } else if (tok[0] == "root") {
                need(2);
                auto ids = parse_ids(tok[1]);
                if (ids.size() != 1) throw Error(ErrorKind::ParseError, "root takes one id");
                inst.root = ids[0];
            } else if (tok[0] == "marked") {
                need(2);
                inst.marked = parse_ids(tok[1]);
            } else if (tok[0] == "marks") {
                need(2);
                inst.marks = parse_ids(tok[1]);
            } else if (tok[0] == "primed") {
                need(2);
                inst.primed = parse_ids(tok[1]);
            } else if (tok[0] == "constraint") {
                need(3);
                auto idx = parse_ids(tok[1]);
                if (idx.size() != 1 || idx[0] < 1) throw Error(ErrorKind::ParseError, "bad constraint index");
                inst.constraints[static_cast<int>(idx[0])] = parse_ids(tok[2]);
            } else {
                throw Error(ErrorKind::ParseError, "unknown directive '" + tok[0] + "'");
            }
        } catch (const Error& e) {
            std::string what = e.what();
            if (what.find("line ") != std::string::npos) throw;
            throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + what.substr(what.find(": ") + 2));
        }
    }
    inst.graph = load_graph(graph_text.str());
    return inst;
}

InstanceFile load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return parse_instance(s.str());
}

std::string format_instance(const InstanceFile& inst) {
    std::ostringstream out;
    if (!inst.kind.empty()) out << "kind " << inst.kind << '\n';
    out << save_graph(inst.graph);
    if (!inst.path.empty()) out << "path " << join_ids(inst.path) << '\n';
    if (inst.axis) out << "axis " << format_rational(*inst.axis) << '\n';
    if (inst.root) out << "root " << *inst.root << '\n';
    if (!inst.marked.empty()) out << "marked " << join_ids(inst.marked) << '\n';
    if (!inst.marks.empty()) out << "marks " << join_ids(inst.marks) << '\n';
    if (!inst.primed.empty()) out << "primed " << join_ids(inst.primed) << '\n';
    for (const auto& [i, ids] : inst.constraints) out << "constraint " << i << ' ' << join_ids(ids) << '\n';
    return out.str();
}

}  // namespace dimerforge
