import json

from models import EnumerationReport, EpsilonResponse, EvalResponse, ExpandResponse, RoundtripResponse
from routers.output import OUT_ARG
from routers.router import CommandRouter, arg
from utils.exceptions import handle_exceptions

router = CommandRouter()

SCHEMAS = {
    "eval": EvalResponse,
    "expand": ExpandResponse,
    "epsilon": EpsilonResponse,
    "enumerate": EnumerationReport,
    "roundtrip": RoundtripResponse,
}


@router.command("schema", help="print the JSON schema of a command's --json output",
                arguments=[arg("name", choices=sorted(SCHEMAS), help="command name"), OUT_ARG])
@handle_exceptions
def cmd_schema(args) -> int:
    text = json.dumps(SCHEMAS[args.name].model_json_schema(), indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as file:
            file.write(text)
    else:
        print(text, end="")
    return 0
