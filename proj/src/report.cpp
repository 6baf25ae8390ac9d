#include "svlab/report.hpp"

#include <sstream>

#include "svlab/errors.hpp"

namespace svlab::cli {

std::string to_string(RecordStatus s)
{
    switch (s) {
    case RecordStatus::pass:
        return "PASS";
    case RecordStatus::fail:
        return "FAIL";
    case RecordStatus::info:
        break;
    }
    return "INFO";
}

namespace {

std::string escape(std::string const & s)
{
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '\t':
            out += "\\t";
            break;
        case '\n':
            out += "\\n";
            break;
        case '\\':
            out += "\\\\";
            break;
        default:
            out += c;
        }
    }
    return out;
}

}  // namespace

Record & Report::add(std::string kind, std::string name, RecordStatus status, Fields fields, std::string anchor)
{
    records.push_back({std::move(kind), std::move(name), status, std::move(fields), std::move(anchor)});
    return records.back();
}

std::vector<Record> Report::records_of(std::string const & kind) const
{
    std::vector<Record> out;
    for (auto const & r : records)
        if (r.kind == kind)
            out.push_back(r);
    return out;
}

bool Report::any_failed() const
{
    for (auto const & r : records)
        if (r.status == RecordStatus::fail)
            return true;
    return false;
}

std::string Report::render_text() const
{
    std::ostringstream os;
    os << "svlab " << command << "\n";
    for (auto const & [k, v] : echo)
        os << "  " << k << ": " << v << "\n";
    for (auto const & r : records) {
        os << "[" << to_string(r.status) << "] " << r.kind << " " << r.name;
        if (!r.anchor.empty())
            os << "  {" << r.anchor << "}";
        os << "\n";
        for (auto const & [k, v] : r.fields)
            os << "    " << k << " = " << v << "\n";
    }
    os << "exit " << exit_code << "\n";
    return os.str();
}

std::string Report::render_machine() const
{
    std::ostringstream os;
    os << "command\t" << escape(command) << "\n";
    for (auto const & [k, v] : echo)
        os << "echo\t" << escape(k) << "\t" << escape(v) << "\n";
    for (auto const & r : records) {
        os << "record\t" << escape(r.kind) << "\t" << escape(r.name) << "\t" << to_string(r.status) << "\t"
           << (r.anchor.empty() ? "-" : escape(r.anchor));
        for (auto const & [k, v] : r.fields)
            os << "\t" << escape(k) << "=" << escape(v);
        os << "\n";
    }
    os << "exit\t" << exit_code << "\n";
    return os.str();
}

std::string render(Report const & r, std::string const & format)
{
    if (format == "text")
        return r.render_text();
    if (format == "machine")
        return r.render_machine();
    throw InputError("format must be 'text' or 'machine'");
}

}  // namespace svlab::cli
