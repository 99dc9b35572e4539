/*
 * Copyright 2026 The procsel Authors
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

/*
 * procsel C API.
 *
 * Every function returns a procsel_status. On failure the message of the most
 * recent error on the calling thread is available from procsel_last_error()
 * until the next failing call on that thread.
 *
 * Ownership:
 *   - Handles returned through out-parameters are owned by the caller and
 *     released with the matching *_free function.
 *   - char* returned through out-parameters must be released with
 *     procsel_string_free().
 *   - Handles are never modified by read-only calls, so a registry, lexicon
 *     or config may be shared between threads as long as no thread mutates it.
 */

#ifndef PROCSEL_PROCSEL_H
#define PROCSEL_PROCSEL_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define PROCSEL_API __declspec(dllexport)
#else
#define PROCSEL_API __attribute__((visibility("default")))
#endif

typedef enum procsel_status {
  PROCSEL_OK = 0,
  PROCSEL_ERR_PARSE = 1,       /* malformed XML or JSON */
  PROCSEL_ERR_VALIDATION = 2,  /* input violates a model invariant */
  PROCSEL_ERR_NOT_FOUND = 3,   /* unknown service, operation, task or rank */
  PROCSEL_ERR_IO = 4,
  PROCSEL_ERR_CONFIG = 5,
  PROCSEL_ERR_ARGUMENT = 6,    /* null handle or pointer */
  PROCSEL_ERR_INTERNAL = 7
} procsel_status;

typedef enum procsel_format {
  PROCSEL_FORMAT_JSON = 0,
  PROCSEL_FORMAT_TEXT = 1
} procsel_format;

typedef struct procsel_registry procsel_registry;
typedef struct procsel_lexicon procsel_lexicon;
typedef struct procsel_config procsel_config;
typedef struct procsel_server procsel_server;

PROCSEL_API const char* procsel_version(void);
PROCSEL_API const char* procsel_last_error(void);
PROCSEL_API const char* procsel_status_name(procsel_status status);
PROCSEL_API void procsel_string_free(char* s);

/* Registry */
PROCSEL_API procsel_status procsel_registry_new(procsel_registry** out);
PROCSEL_API procsel_status procsel_registry_load(const char* path, procsel_registry** out);
PROCSEL_API procsel_status procsel_registry_from_json(const char* json, procsel_registry** out);
PROCSEL_API procsel_status procsel_registry_save(const procsel_registry* reg, const char* path);
PROCSEL_API procsel_status procsel_registry_to_json(const procsel_registry* reg, char** out_json);
/* timestamp: ISO-8601, or NULL for the current UTC time. */
PROCSEL_API procsel_status procsel_registry_append_snapshot(procsel_registry* reg, const char* service_key,
                                                            const char* operation, const char* timestamp,
                                                            double availability, double execution_time_ms,
                                                            long long total_calls);
/* Imports a WSDL 1.1 file into the named category. keywords is a comma
 * separated list used when the category has to be created; NULL derives the
 * keywords from the category name. The new serviceKey is returned through
 * out_service_key when it is not NULL. */
PROCSEL_API procsel_status procsel_registry_import_wsdl(procsel_registry* reg, const char* wsdl_path,
                                                        const char* category, const char* keywords,
                                                        char** out_service_key);
PROCSEL_API void procsel_registry_free(procsel_registry* reg);

/* Lexicon */
PROCSEL_API procsel_status procsel_lexicon_new(procsel_lexicon** out);
PROCSEL_API procsel_status procsel_lexicon_load(const char* path, procsel_lexicon** out);
PROCSEL_API void procsel_lexicon_free(procsel_lexicon* lex);

/* Configuration. path may be NULL for the built-in defaults. */
PROCSEL_API procsel_status procsel_config_load(const char* path, procsel_config** out);
/* Applies a partial JSON configuration object on top of cfg. */
PROCSEL_API procsel_status procsel_config_apply_json(procsel_config* cfg, const char* overrides_json);
/* Paths named in the configuration file, "" when absent. Owned by cfg. */
PROCSEL_API const char* procsel_config_lexicon_path(const procsel_config* cfg);
PROCSEL_API const char* procsel_config_registry_path(const procsel_config* cfg);
PROCSEL_API procsel_status procsel_config_to_json(const procsel_config* cfg, char** out_json);
PROCSEL_API void procsel_config_free(procsel_config* cfg);

/* Selection */
PROCSEL_API procsel_status procsel_select(const procsel_registry* reg, const procsel_lexicon* lex,
                                          const procsel_config* cfg, const char* bpmn_xml,
                                          procsel_format format, char** out_report);
/* Parses the process and binds every service task; on success out_summary
 * lists the bound tasks. */
PROCSEL_API procsel_status procsel_validate_bpmn(const char* bpmn_xml, char** out_summary);
PROCSEL_API procsel_status procsel_explain(const char* report_json, const char* task_id, int rank,
                                           char** out_text);

/* HTTP server. The registry, lexicon and config are copied. */
PROCSEL_API procsel_status procsel_server_new(const procsel_registry* reg, const procsel_lexicon* lex,
                                              const procsel_config* cfg, procsel_server** out);
/* port 0 picks a free port; the bound port is written to out_port. */
PROCSEL_API procsel_status procsel_server_bind(procsel_server* srv, const char* host, int port, int* out_port);
/* Blocks until procsel_server_stop() is called from another thread. */
PROCSEL_API procsel_status procsel_server_run(procsel_server* srv);
PROCSEL_API void procsel_server_stop(procsel_server* srv);
PROCSEL_API void procsel_server_free(procsel_server* srv);

#ifdef __cplusplus
}
#endif

#endif /* PROCSEL_PROCSEL_H */
