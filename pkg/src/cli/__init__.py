# CLI Package - Front end de linea de comandos de coarse-kit
#
# Modulos:
#   main.py            - argparse, despacho de subcomandos y exit codes
#   config_loader.py   - load_config, configure_logging
#   bridge_utils.py    - JSON en stdout, escritura atomica, errores
#   workspace.py       - Schema pydantic del workspace JSON
#   ui_theme.py        - Salida rich en stderr
#   *_runner.py        - Un runner por subcomando
