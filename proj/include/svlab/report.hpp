#ifndef SVLAB_REPORT_HPP
#define SVLAB_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace svlab::cli {

enum class RecordStatus { pass, fail, info };

std::string to_string(RecordStatus s);

using Fields = std::vector<std::pair<std::string, std::string>>;

struct Record {
    std::string kind;
    std::string name;
    RecordStatus status = RecordStatus::info;
    Fields fields;
    std::string anchor;

    bool operator==(Record const &) const = default;
};

/*
 * Output of one command. Records keep insertion order, so identical input
 * renders byte-identically in both formats.
 *
 * Machine format, one tab-separated line per item:
 *   command <name>
 *   echo    <key> <value>
 *   record  <kind> <name> <status> <anchor|-> <key=value>...
 *   exit    <code>
 * Tabs, newlines and backslashes inside values are escaped as \t \n \\.
 */
struct Report {
    std::string command;
    Fields echo;
    std::vector<Record> records;
    int exit_code = 0;

    Record & add(std::string kind, std::string name, RecordStatus status, Fields fields = {},
                 std::string anchor = {});
    std::vector<Record> records_of(std::string const & kind) const;
    bool any_failed() const;

    std::string render_text() const;
    std::string render_machine() const;
};

std::string render(Report const & r, std::string const & format);

}  // namespace svlab::cli

#endif
